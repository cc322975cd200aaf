#include "pcwkit/batch.hpp"

#include <exception>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "pcwkit/io.hpp"
#include "pcwkit/pcw.hpp"

namespace pcwkit {

const char* vector_kind_name(VectorKind kind) {
  switch (kind) {
    case VectorKind::kDet:
      return "det";
    case VectorKind::kAbsdet:
      return "absdet";
    case VectorKind::kPerm:
      return "perm";
  }
  return "?";
}

namespace {

ComputeRow compute_one(const BinaryMatrix& h, const ColumnSubset& s, VectorKind kind,
                       bool with_minimal) {
  ComputeRow row;
  row.subset = s;
  switch (kind) {
    case VectorKind::kDet:
      row.vec = det_vector(h, s);
      break;
    case VectorKind::kAbsdet:
      row.vec = absdet_vector(h, s);
      break;
    case VectorKind::kPerm:
      row.vec = perm_vector(h, s);
      break;
  }

  IntVector magnitude = row.vec;
  for (BigInt& x : magnitude) {
    if (x < 0) x = -x;
  }
  row.unscaled = is_unscaled_pcw(h, magnitude);
  if (!row.unscaled) {
    std::ostringstream msg;
    msg << "computed " << vector_kind_name(kind) << " vector for subset {"
        << serialize_subset(s) << "} is not an unscaled pseudo-codeword: "
        << serialize_vector(row.vec);
    throw ContractViolation(msg.str());
  }
  row.weight = awgnc_pseudoweight(magnitude);
  if (with_minimal && !row.weight.zero_vector) {
    row.minimal = is_minimal_pcw(h, magnitude) ? 1 : 0;
  }
  return row;
}

}  // namespace

std::vector<ComputeRow> compute_vectors(const BinaryMatrix& h, const ComputeOptions& opt) {
  if (h.rows() >= h.cols()) {
    throw std::invalid_argument("constructions require m < n");
  }
  const std::size_t k = h.rows() + 1;

  std::uint64_t total;
  const bool enumerate = opt.subsets.empty();
  if (enumerate) {
    total = binomial(h.cols(), k);
  } else {
    total = opt.subsets.size();
  }

  std::vector<ComputeRow> rows(total);
  const unsigned threads =
      std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(std::max<std::uint64_t>(total, 1))));

  auto run_block = [&](std::uint64_t begin, std::uint64_t end) {
    if (enumerate) {
      SubsetEnumerator stream(h.cols(), k, begin);
      for (std::uint64_t r = begin; r < end; ++r, stream.next()) {
        rows[r] = compute_one(h, stream.current(), opt.kind, opt.with_minimal);
      }
    } else {
      for (std::uint64_t r = begin; r < end; ++r) {
        rows[r] = compute_one(h, opt.subsets[r], opt.kind, opt.with_minimal);
      }
    }
  };

  if (threads == 1) {
    run_block(0, total);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = total * t / threads;
      const std::uint64_t end = total * (t + 1) / threads;
      pool.emplace_back([&, t, begin, end] {
        try {
          run_block(begin, end);
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
    for (std::thread& worker : pool) worker.join();
    for (const std::exception_ptr& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  if (opt.dedupe) {
    std::vector<ComputeRow> unique;
    std::unordered_set<std::string> seen;
    for (ComputeRow& row : rows) {
      if (seen.insert(serialize_vector(row.vec)).second) {
        unique.push_back(std::move(row));
      }
    }
    rows = std::move(unique);
  }
  return rows;
}

std::string rows_to_csv(const std::vector<ComputeRow>& rows, bool with_minimal) {
  std::ostringstream out;
  out << "subset,vector,is_unscaled_pcw,pseudo_weight,is_zero";
  if (with_minimal) out << ",is_minimal";
  out << "\n";
  for (const ComputeRow& row : rows) {
    out << "\"" << serialize_subset(row.subset) << "\",\"" << serialize_vector(row.vec)
        << "\"," << (row.unscaled ? 1 : 0) << ",";
    if (!row.weight.zero_vector) out << format_weight(row.weight.as_double());
    out << "," << (row.weight.zero_vector ? 1 : 0);
    if (with_minimal) {
      out << ",";
      if (row.minimal >= 0) out << row.minimal;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace pcwkit

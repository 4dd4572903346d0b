#pragma once

// Exhaustive enumeration over prime fields.
//
// Candidates are indexed lexicographically with the first flat entry most
// significant (row-major for matrices, product[i][j][k] for tensors). The
// index range is split into contiguous blocks, one per worker, and the hit
// lists are concatenated in block order, so output never depends on the
// worker count. Every hit is re-verified with the library check before it
// is reported.

#include <cstdint>
#include <optional>
#include <vector>

#include "antiflex/omod.hpp"

namespace antiflex {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// kDefaultBudget, or the value of ANTIFLEX_BUDGET when set.
std::uint64_t default_budget();

struct SearchOptions {
  std::uint64_t budget = default_budget();
  int workers = 1;
};

template <class T>
struct SearchResult {
  std::vector<T> hits;
  std::uint64_t scanned = 0;
};

/// p^entries, saturating at UINT64_MAX.
std::uint64_t search_space_size(std::uint32_t p, int entries);

/// All structure tensors on F_p^dim passing `filter` (all tensors when unset).
SearchResult<Algebra<Fp>> enumerate_algebras(const FieldSpec& field, int dim, std::optional<IdentityKind> filter,
                                             const SearchOptions& opts = {});

enum class OperatorKind { RotaBaxter, Nijenhuis };

struct OperatorQuery {
  OperatorKind kind = OperatorKind::RotaBaxter;
  Fp weight{0};  // Rota-Baxter only
};

/// All square maps on A passing the requested operator check.
SearchResult<Mat<Fp>> enumerate_operators(const Algebra<Fp>& a, const OperatorQuery& query,
                                          const SearchOptions& opts = {});

/// All T: M → A passing check_o_operator.
SearchResult<Mat<Fp>> enumerate_o_operators(const Bimodule<Fp>& b, const SearchOptions& opts = {});

/// All action pairs of A on F_p^moddim passing check_bimodule.
SearchResult<Bimodule<Fp>> enumerate_bimodules(const Algebra<Fp>& a, int moddim, const SearchOptions& opts = {});

/// The candidate with lexicographic index `index` among rows×cols matrices over F_p.
Mat<Fp> matrix_at(const FieldSpec& field, int rows, int cols, std::uint64_t index);

/// The candidate with lexicographic index `index` among dim-dimensional tensors over F_p.
Algebra<Fp> algebra_at(const FieldSpec& field, int dim, std::uint64_t index);

}  // namespace antiflex

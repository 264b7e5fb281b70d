#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "distcol/instance.hpp"

namespace distcol {

/// n x n array over symbols {0..n-1}; every row and column a permutation.
class LatinSquare {
 public:
  /// Throws InvalidInstance naming the offending row/column on bad input.
  explicit LatinSquare(std::vector<std::vector<int>> rows);

  /// cells[i][j] = (i + j) mod n
  static LatinSquare cyclic(int n);

  /// n lines of n whitespace-separated integers; blank lines are ignored.
  static LatinSquare parse(std::string_view text);
  std::string to_text() const;

  int order() const { return static_cast<int>(rows_.size()); }
  int at(int row, int column) const {
    return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(column)];
  }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  bool operator==(const LatinSquare&) const = default;
  auto operator<=>(const LatinSquare&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

struct TransversalCell {
  int row = 0;
  int column = 0;
  int symbol = 0;

  bool operator==(const TransversalCell&) const = default;
};

using Transversal = std::vector<TransversalCell>;

/// Distinct rows, columns and symbols, each cell matching the square.
bool is_transversal(const LatinSquare& sq, const Transversal& t);

/// One hypergraph vertex of V1 per permutation; V2 and V3 are the domain and
/// range {0..d} of those permutations.
struct TripartiteInstance {
  int d = 3;
  std::vector<Distortion> v1;
};

/// One A-vertex, one B-vertex, one parallel edge per V1 element. Throws if
/// |V1| > d.
DistortionInstance permutations_to_instance(const TripartiteInstance& t);

/// Rows other than `deleted_row`, in ascending order, each read as the
/// permutation column -> symbol. Order 4 only.
TripartiteInstance latin_to_instance(const LatinSquare& sq, int deleted_row);

/// Size-3 transversal of an order-4 square via the d = 3 solver.
Transversal find_partial_transversal(const LatinSquare& sq, int deleted_row = 0);

/// All 576 Latin squares of order 4, in lexicographic order.
std::vector<LatinSquare> enumerate_latin_4();

}  // namespace distcol

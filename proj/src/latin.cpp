#include "distcol/latin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "distcol/engine.hpp"
#include "distcol/errors.hpp"

namespace distcol {

namespace {
constexpr int kSupportedOrder = 4;
}

LatinSquare::LatinSquare(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  const auto n = rows_.size();
  for (std::size_t r = 0; r < n; ++r) {
    if (rows_[r].size() != n) {
      throw InvalidInstance("row " + std::to_string(r) + " has " + std::to_string(rows_[r].size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      const int s = rows_[r][c];
      if (s < 0 || static_cast<std::size_t>(s) >= n) {
        throw InvalidInstance("symbol " + std::to_string(s) + " out of range at (" + std::to_string(r) + ", " +
                              std::to_string(c) + ")");
      }
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0; k < c; ++k) {
        if (rows_[r][k] == rows_[r][c]) {
          throw InvalidInstance("symbol " + std::to_string(rows_[r][c]) + " repeated in row " + std::to_string(r) +
                                " at columns " + std::to_string(k) + " and " + std::to_string(c));
        }
      }
      for (std::size_t k = 0; k < r; ++k) {
        if (rows_[k][c] == rows_[r][c]) {
          throw InvalidInstance("symbol " + std::to_string(rows_[r][c]) + " repeated in column " +
                                std::to_string(c) + " at rows " + std::to_string(k) + " and " + std::to_string(r));
        }
      }
    }
  }
}

LatinSquare LatinSquare::cyclic(int n) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  }
  return LatinSquare(std::move(rows));
}

LatinSquare LatinSquare::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<int> row;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoi(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw InvalidInstance("not an integer: '" + token + "' on line " + std::to_string(rows.size() + 1));
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidInstance("empty Latin square");
  return LatinSquare(std::move(rows));
}

std::string LatinSquare::to_text() const {
  std::ostringstream out;
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
    out << '\n';
  }
  return out.str();
}

bool is_transversal(const LatinSquare& sq, const Transversal& t) {
  const int n = sq.order();
  std::vector<char> rows(static_cast<std::size_t>(n), 0), cols(rows), syms(rows);
  for (const TransversalCell& cell : t) {
    if (cell.row < 0 || cell.row >= n || cell.column < 0 || cell.column >= n) return false;
    if (sq.at(cell.row, cell.column) != cell.symbol) return false;
    const auto first_use = [](std::vector<char>& seen, int key) {
      char& slot = seen[static_cast<std::size_t>(key)];
      return !std::exchange(slot, 1);
    };
    if (!first_use(rows, cell.row) || !first_use(cols, cell.column) || !first_use(syms, cell.symbol)) return false;
  }
  return true;
}

DistortionInstance permutations_to_instance(const TripartiteInstance& t) {
  if (static_cast<int>(t.v1.size()) > t.d) {
    throw InvalidInstance("|V1| = " + std::to_string(t.v1.size()) + " exceeds d = " + std::to_string(t.d));
  }
  DistortionInstance inst;
  inst.d = t.d;
  inst.size_a = 1;
  inst.size_b = 1;
  for (const Distortion& r : t.v1) inst.edges.push_back(Edge{0, 0, r, false});
  inst.validate();
  return inst;
}

TripartiteInstance latin_to_instance(const LatinSquare& sq, int deleted_row) {
  if (sq.order() != kSupportedOrder) {
    throw InvalidInstance("only order 4 supported (got order " + std::to_string(sq.order()) + ")");
  }
  if (deleted_row < 0 || deleted_row >= kSupportedOrder) {
    throw InvalidInstance("deleted row must be in 0..3");
  }
  TripartiteInstance t;
  t.d = kSupportedOrder - 1;
  for (int r = 0; r < kSupportedOrder; ++r) {
    if (r != deleted_row) t.v1.emplace_back(sq.rows()[static_cast<std::size_t>(r)]);
  }
  return t;
}

Transversal find_partial_transversal(const LatinSquare& sq, int deleted_row) {
  const DistortionInstance inst = permutations_to_instance(latin_to_instance(sq, deleted_row));
  const EdgeColouring f = solve(inst);
  Transversal t;
  int row = 0;
  for (EdgeId e = 0; e < static_cast<EdgeId>(inst.edges.size()); ++e, ++row) {
    if (row == deleted_row) ++row;
    t.push_back({row, f[e], sq.at(row, f[e])});
  }
  return t;
}

std::vector<LatinSquare> enumerate_latin_4() {
  constexpr auto n = static_cast<std::size_t>(kSupportedOrder);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<LatinSquare> out;
  std::vector<std::vector<int>> rows;
  // Row-by-row backtracking; perms are in lexicographic order, so squares are too.
  const auto extend = [&](auto&& self) -> void {
    if (rows.size() == n) {
      out.emplace_back(rows);
      return;
    }
    for (const auto& candidate : perms) {
      bool fits = true;
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < n && fits; ++c) fits = row[c] != candidate[c];
        if (!fits) break;
      }
      if (!fits) continue;
      rows.push_back(candidate);
      self(self);
      rows.pop_back();
    }
  };
  extend(extend);
  return out;
}

}  // namespace distcol

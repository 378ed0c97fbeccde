#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ufc/bitvector.hpp"

namespace ufc {

/// [A-Za-z_][A-Za-z0-9_-]*
bool is_identifier(std::string_view text) noexcept;

/// Boolean dataset: k named primitive features observed on n individuals, stored column-major.
/// Immutable once built; the noise helpers return new values.
class Dataset {
 public:
  /// Validates names (unique identifiers, k >= 2) and column lengths (all equal, n >= 1).
  Dataset(std::vector<std::string> names, std::vector<BitVector> columns);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return names_.size(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<BitVector>& columns() const noexcept { return columns_; }
  const BitVector& column(std::size_t j) const { return columns_.at(j); }
  std::optional<std::size_t> index_of(std::string_view name) const noexcept;

  bool at(std::size_t row, std::size_t col) const { return columns_[col].test(row); }
  /// Row-major view of one individual: k bits, bit j = feature j.
  BitVector row(std::size_t i) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<BitVector> columns_;
  std::size_t n_ = 0;
};

/// Strict 0/1 CSV with a header row of feature names. LF or CRLF; blank lines are skipped.
Dataset load_dataset(std::istream& in);
Dataset load_dataset_file(const std::string& path);
void write_dataset(std::ostream& out, const Dataset& d);

/// Number of distinct full rows.
std::size_t unique_count(const Dataset& d);

struct Cell {
  std::size_t row;
  std::size_t col;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// round(pct * k * n) distinct cells drawn without replacement, deterministic in `seed`.
/// Cells come back sorted column-major.
std::vector<Cell> noise_cells(std::size_t n, std::size_t k, double pct, std::uint64_t seed);
Dataset flip_cells(const Dataset& d, const std::vector<Cell>& cells);
Dataset inject_noise(const Dataset& d, double pct, std::uint64_t seed);

}  // namespace ufc

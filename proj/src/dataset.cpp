#include "ufc/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <unordered_set>

#include "ufc/error.hpp"

namespace ufc {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

void validate_names(const std::vector<std::string>& names, std::size_t line) {
  if (names.size() < 2) {
    throw DatasetError("at least 2 features required, got " + std::to_string(names.size()), line);
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) throw DatasetError("empty feature name", line);
    if (!is_identifier(name)) throw DatasetError("invalid feature name '" + name + "'", line);
    if (!seen.insert(name).second) throw DatasetError("duplicate feature name '" + name + "'", line);
  }
}

// Unbiased draw in [0, bound] from a 64-bit engine.
std::uint64_t draw_upto(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == ~std::uint64_t{0}) return rng();
  const std::uint64_t range = bound + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

}  // namespace

bool is_identifier(std::string_view text) noexcept {
  if (text.empty()) return false;
  const auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  const auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '-'; });
}

Dataset::Dataset(std::vector<std::string> names, std::vector<BitVector> columns)
    : names_(std::move(names)), columns_(std::move(columns)) {
  validate_names(names_, 0);
  if (columns_.size() != names_.size()) {
    throw DatasetError("got " + std::to_string(columns_.size()) + " columns for " +
                           std::to_string(names_.size()) + " names",
                       0);
  }
  n_ = columns_.front().size();
  if (n_ == 0) throw DatasetError("dataset has no individuals", 0);
  for (const auto& col : columns_) {
    if (col.size() != n_) throw DatasetError("columns have differing lengths", 0);
  }
}

std::optional<std::size_t> Dataset::index_of(std::string_view name) const noexcept {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

BitVector Dataset::row(std::size_t i) const {
  BitVector out(k());
  for (std::size_t j = 0; j < k(); ++j) out.set(j, columns_[j].test(i));
  return out;
}

Dataset load_dataset(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> names;
  std::size_t header_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    for (auto cell : split_cells(line)) names.emplace_back(cell);
    header_line = line_no;
    break;
  }
  if (header_line == 0) throw DatasetError("missing header row", 0);
  validate_names(names, header_line);

  const std::size_t k = names.size();
  std::vector<std::vector<bool>> cols(k);
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_cells(line);
    if (cells.size() != k) {
      throw DatasetError("expected " + std::to_string(k) + " cells, got " + std::to_string(cells.size()),
                         line_no);
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (cells[j] == "1") {
        cols[j].push_back(true);
      } else if (cells[j] == "0") {
        cols[j].push_back(false);
      } else {
        throw DatasetError("non-binary cell '" + std::string(cells[j]) + "' in column " +
                               std::to_string(j + 1),
                           line_no);
      }
    }
  }
  const std::size_t n = cols.front().size();
  if (n == 0) throw DatasetError("no data rows", line_no);

  std::vector<BitVector> columns;
  columns.reserve(k);
  for (const auto& col : cols) {
    BitVector bits(n);
    for (std::size_t i = 0; i < n; ++i) bits.set(i, col[i]);
    columns.push_back(std::move(bits));
  }
  return Dataset(std::move(names), std::move(columns));
}

Dataset load_dataset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open dataset file '" + path + "'");
  return load_dataset(in);
}

void write_dataset(std::ostream& out, const Dataset& d) {
  for (std::size_t j = 0; j < d.k(); ++j) {
    if (j > 0) out << ',';
    out << d.names()[j];
  }
  out << '\n';
  std::string row;
  for (std::size_t i = 0; i < d.n(); ++i) {
    row.clear();
    for (std::size_t j = 0; j < d.k(); ++j) {
      if (j > 0) row.push_back(',');
      row.push_back(d.at(i, j) ? '1' : '0');
    }
    out << row << '\n';
  }
}

std::size_t unique_count(const Dataset& d) {
  struct RowHash {
    std::size_t operator()(const BitVector& b) const noexcept { return b.hash(); }
  };
  std::unordered_set<BitVector, RowHash> rows;
  rows.reserve(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) rows.insert(d.row(i));
  return rows.size();
}

std::vector<Cell> noise_cells(std::size_t n, std::size_t k, double pct, std::uint64_t seed) {
  if (!(pct >= 0.0 && pct <= 1.0)) throw Error("noise fraction must lie in [0, 1]");
  const std::uint64_t total = static_cast<std::uint64_t>(n) * k;
  const auto flips = static_cast<std::uint64_t>(std::llround(pct * static_cast<double>(total)));

  // Floyd's sampling of `flips` distinct cell indices out of `total`.
  std::mt19937_64 rng(seed);
  std::vector<bool> chosen(total, false);
  for (std::uint64_t j = total - flips; j < total; ++j) {
    const std::uint64_t t = draw_upto(rng, j);
    chosen[chosen[t] ? j : t] = true;
  }

  std::vector<Cell> cells;
  cells.reserve(flips);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (chosen[idx]) cells.push_back({static_cast<std::size_t>(idx % n), static_cast<std::size_t>(idx / n)});
  }
  return cells;
}

Dataset flip_cells(const Dataset& d, const std::vector<Cell>& cells) {
  std::vector<BitVector> columns = d.columns();
  for (const auto& cell : cells) {
    if (cell.row >= d.n() || cell.col >= d.k()) throw Error("noise cell outside the dataset");
    columns[cell.col].flip(cell.row);
  }
  return Dataset(d.names(), std::move(columns));
}

Dataset inject_noise(const Dataset& d, double pct, std::uint64_t seed) {
  return flip_cells(d, noise_cells(d.n(), d.k(), pct, seed));
}

}  // namespace ufc

#include <algorithm>
#include <sstream>

#include "exact_json.hpp"
#include "treecalc/delta.hpp"

namespace treecalc {

std::string to_json(const DeltaMatrix& M) {
  std::string out = "{\"n\":" + std::to_string(M.n()) + ",\"rows\":[";
  for (int m = 1; m <= M.size(); ++m) {
    out += m > 1 ? ",[" : "[";
    for (int k = 1; k <= M.size(); ++k) {
      if (k > 1) out += ',';
      out += to_decimal(M.at(m, k));
    }
    out += ']';
  }
  out += "]}";
  return out;
}

std::string to_csv(const DeltaMatrix& M) {
  std::string out;
  for (int m = 1; m <= M.size(); ++m) {
    for (int k = 1; k <= M.size(); ++k) {
      if (k > 1) out += ',';
      out += to_decimal(M.at(m, k));
    }
    out += '\n';
  }
  return out;
}

std::string to_pretty(const DeltaMatrix& M) {
  std::vector<std::size_t> width(M.size(), 1);
  for (int m = 1; m <= M.size(); ++m)
    for (int k = 1; k <= M.size(); ++k)
      width[k - 1] = std::max(width[k - 1], to_decimal(M.at(m, k)).size());
  std::string out;
  for (int m = 1; m <= M.size(); ++m) {
    for (int k = 1; k <= M.size(); ++k) {
      const std::string v = to_decimal(M.at(m, k));
      if (k > 1) out += ' ';
      out.append(width[k - 1] - v.size(), ' ');
      out += v;
    }
    out += '\n';
  }
  return out;
}

namespace {

DeltaMatrix from_rows(int n, const std::vector<std::vector<BigInt>>& rows) {
  const int N = 2 * n;
  if (static_cast<int>(rows.size()) != N)
    throw std::invalid_argument("expected " + std::to_string(N) + " rows, got " +
                                std::to_string(rows.size()));
  Grid g(N, N);
  for (int r = 0; r < N; ++r) {
    if (static_cast<int>(rows[r].size()) != N)
      throw std::invalid_argument("row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) + " entries");
    for (int c = 0; c < N; ++c) g.at(r, c) = rows[r][c];
  }
  return DeltaMatrix(n, std::move(g));
}

}  // namespace

DeltaMatrix matrix_from_json(const std::string& text) {
  const auto doc = detail::parse_integer_json(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows"))
    throw std::invalid_argument("matrix JSON needs \"n\" and \"rows\"");
  const int n = detail::small_integer_value(doc.at("n"));
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : doc.at("rows")) {
    if (!r.is_array()) throw std::invalid_argument("rows must be arrays");
    std::vector<BigInt> row;
    for (const auto& v : r) row.push_back(detail::integer_value(v));
    rows.push_back(std::move(row));
  }
  return from_rows(n, rows);
}

DeltaMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<BigInt>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<BigInt> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      BigInt v;
      if (cell.empty() || v.set_str(cell, 10) != 0)
        throw std::invalid_argument("bad CSV entry: '" + cell + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.size() % 2 != 0)
    throw std::invalid_argument("CSV matrix must have an even, positive number of rows");
  return from_rows(static_cast<int>(rows.size()) / 2, rows);
}

}  // namespace treecalc

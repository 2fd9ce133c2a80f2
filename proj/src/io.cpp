// SPDX-License-Identifier: MIT

#include "relaxfv/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace relaxfv {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open " + tmp + " for writing");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    os.flush();
    if (!os) throw IoError("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    const int err = errno;
    std::remove(tmp.c_str());
    throw IoError("rename " + tmp + " -> " + path + " failed: " + std::strerror(err));
  }
}

CsvTable read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path);
  CsvTable t;
  std::string line;
  if (!std::getline(is, line)) throw IoError(path + ": empty file");
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) t.header.push_back(cell);
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    row.reserve(t.header.size());
    const char* p = line.c_str();
    while (*p) {
      char* end = nullptr;
      const double v = std::strtod(p, &end);
      if (end == p)
        throw IoError(path + ":" + std::to_string(lineno) + ": cannot parse '" + p + "'");
      row.push_back(v);
      p = end;
      if (*p == ',') ++p;
    }
    if (row.size() != t.header.size())
      throw IoError(path + ":" + std::to_string(lineno) + ": expected " +
                    std::to_string(t.header.size()) + " fields, found " +
                    std::to_string(row.size()));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_eoc_csv(const std::string& path,
                   const std::map<std::string, std::vector<EocRow>>& table) {
  std::string s = "N,var,error,rate\n";
  for (const auto& [var, rows] : table) {
    for (const auto& r : rows) {
      s += std::to_string(r.n) + "," + var + "," + format_g17(r.error) + ",";
      if (!std::isnan(r.rate)) s += format_g17(r.rate);
      s += "\n";
    }
  }
  write_text_atomic(path, s);
}

}  // namespace relaxfv

#include "biblio/csv.hpp"

#include <fstream>

#include "biblio/corpus.hpp"

namespace biblio::csv {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(delim, start);
    if (pos == std::string::npos) {
      out.push_back(trim(line.substr(start)));
      break;
    }
    out.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

void for_each_row(
    const std::filesystem::path& path, char delim,
    const std::function<void(const std::vector<std::string>&, int)>& row) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    row(split(t, delim), lineno);
  }
}

}  // namespace biblio::csv

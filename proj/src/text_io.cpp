#include "posetsym/text_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "posetsym/error.hpp"

namespace posetsym {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<Structure> read_structures(std::istream& in) {
  std::vector<Structure> out;
  std::string raw;
  int line_no = 0;
  bool open = false;
  bool is_digraph = false;
  int n = 0;
  std::vector<std::pair<int, int>> pairs;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string head;
    words >> head;

    if (!open) {
      if (head != "poset" && head != "digraph") fail(line_no, "expected 'poset <n>' or 'digraph <n>'");
      if (!(words >> n) || n < 0) fail(line_no, "missing or negative size");
      std::string extra;
      if (words >> extra) fail(line_no, "trailing text after header");
      if (n > kMaxGroundSet) fail(line_no, "size above 64");
      is_digraph = head == "digraph";
      pairs.clear();
      open = true;
      continue;
    }

    if (head == "end") {
      if (is_digraph) {
        out.emplace_back(Digraph::from_edges(n, pairs));
      } else {
        out.emplace_back(Poset::from_relations(n, pairs));
      }
      open = false;
      continue;
    }

    std::istringstream nums(line);
    int i = 0;
    int j = 0;
    std::string extra;
    if (!(nums >> i >> j) || (nums >> extra)) fail(line_no, "expected '<i> <j>'");
    if (i < 1 || i > n || j < 1 || j > n) fail(line_no, "element outside [1, n]");
    pairs.emplace_back(i - 1, j - 1);
  }
  if (open) fail(line_no, "missing 'end'");
  return out;
}

std::vector<Structure> read_structures_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_structures(in);
}

Poset read_poset(std::istream& in) {
  auto all = read_structures(in);
  if (all.size() != 1) throw ParseError("expected exactly one poset");
  if (!std::holds_alternative<Poset>(all[0])) throw ParseError("expected a poset, found a digraph");
  return std::get<Poset>(all[0]);
}

void write_poset(std::ostream& out, const Poset& p) {
  out << "poset " << p.size() << '\n';
  for (int i = 0; i < p.size(); ++i) {
    for_each_bit(p.up(i), [&](int j) {
      // Cover: nothing strictly between i and j.
      if ((p.up(i) & p.down(j)) == 0) out << i + 1 << ' ' << j + 1 << '\n';
    });
  }
  out << "end\n";
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << "digraph " << d.size() << '\n';
  for (int i = 0; i < d.size(); ++i) {
    for_each_bit(d.out(i), [&](int j) { out << i + 1 << ' ' << j + 1 << '\n'; });
  }
  out << "end\n";
}

std::string format_listing(const Listing& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k != 0) s += ',';
    s += std::to_string(w[k] + 1);
  }
  return s + ")";
}

}  // namespace posetsym

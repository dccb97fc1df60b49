#include "blaschke_lab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace blaschke_lab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> fields(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(long line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

double parse_real(const std::string& tok, long line_no) {
  double v = 0.0;
  const char* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) fail(line_no, "bad number '" + tok + "'");
  return v;
}

long parse_integer(const std::string& tok, long line_no) {
  long v = 0;
  const char* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) fail(line_no, "bad integer '" + tok + "'");
  return v;
}

bool skip_line(const std::string& line) {
  const std::string t = trim(line);
  return t.empty() || t[0] == '#';
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_sequence(std::ostream& out, const FiniteSequence& s) {
  out << "# re im mult\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << format_double(s.point(i).re()) << ' ' << format_double(s.point(i).im()) << ' ' << s.multiplicity(i)
        << '\n';
  }
}

FiniteSequence read_sequence(std::istream& in) {
  std::vector<DiskPoint> pts;
  std::vector<int> mult;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    const auto f = fields(line);
    if (f.size() != 3) fail(line_no, "expected 're im mult'");
    const double re = parse_real(f[0], line_no);
    const double im = parse_real(f[1], line_no);
    const long m = parse_integer(f[2], line_no);
    if (m < 1 || m > 1000000) fail(line_no, "multiplicity must be a positive integer");
    try {
      pts.emplace_back(re, im);
    } catch (const std::invalid_argument&) {
      fail(line_no, "point outside the disk");
    }
    mult.push_back(static_cast<int>(m));
  }
  try {
    return FiniteSequence(std::move(pts), std::move(mult));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

FiniteSequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_sequence(in);
}

void write_sequence_file(const std::string& path, const FiniteSequence& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_sequence(out, s);
}

std::vector<HermiteJet> read_targets(std::istream& in, const ClusterPartition& part) {
  std::vector<HermiteJet> jets;
  for (const Cluster& c : part.clusters) jets.push_back(zero_jet(c));
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    const auto f = fields(line);
    if (f.size() != 5) fail(line_no, "expected 'cluster point order re im'");
    const long k = parse_integer(f[0], line_no);
    const long i = parse_integer(f[1], line_no);
    const long j = parse_integer(f[2], line_no);
    if (k < 0 || static_cast<std::size_t>(k) >= part.size()) fail(line_no, "cluster index out of range");
    const Cluster& c = part.clusters[static_cast<std::size_t>(k)];
    if (i < 0 || static_cast<std::size_t>(i) >= c.points.size()) fail(line_no, "point index out of range");
    if (j < 0 || j >= c.points.multiplicity(static_cast<std::size_t>(i))) {
      fail(line_no, "derivative order not below multiplicity");
    }
    jets[static_cast<std::size_t>(k)].derivatives[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        Complex(parse_real(f[3], line_no), parse_real(f[4], line_no));
  }
  return jets;
}

void write_targets(std::ostream& out, const ClusterPartition& part, const std::vector<HermiteJet>& jets) {
  out << "# cluster point order re im\n";
  for (std::size_t k = 0; k < part.size() && k < jets.size(); ++k) {
    for (std::size_t i = 0; i < jets[k].derivatives.size(); ++i) {
      for (std::size_t j = 0; j < jets[k].derivatives[i].size(); ++j) {
        const Complex v = jets[k].derivatives[i][j];
        out << k << ' ' << i << ' ' << j << ' ' << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
      }
    }
  }
}

void Report::set(const std::string& section, const std::string& key, const std::string& value) {
  auto sec = std::find_if(sections_.begin(), sections_.end(), [&](const auto& s) { return s.first == section; });
  if (sec == sections_.end()) {
    sections_.emplace_back(section, Entries{});
    sec = std::prev(sections_.end());
  }
  for (auto& [k, v] : sec->second) {
    if (k == key) {
      v = value;
      return;
    }
  }
  sec->second.emplace_back(key, value);
}

void Report::set(const std::string& section, const std::string& key, double value) {
  set(section, key, format_double(value));
}

void Report::set(const std::string& section, const std::string& key, long value) {
  set(section, key, std::to_string(value));
}

std::string Report::get(const std::string& section, const std::string& key) const {
  for (const auto& [name, entries] : sections_) {
    if (name != section) continue;
    for (const auto& [k, v] : entries) {
      if (k == key) return v;
    }
  }
  return {};
}

void Report::write(std::ostream& out) const {
  bool first = true;
  for (const auto& [name, entries] : sections_) {
    if (!first) out << '\n';
    first = false;
    out << '[' << name << "]\n";
    for (const auto& [k, v] : entries) out << k << " = " << v << '\n';
  }
}

Report Report::parse(std::istream& in) {
  Report r;
  std::string section;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    const std::string t = trim(line);
    if (t.front() == '[') {
      if (t.back() != ']') fail(line_no, "unterminated section header");
      section = t.substr(1, t.size() - 2);
      continue;
    }
    const auto eq = t.find(" = ");
    if (eq == std::string::npos || section.empty()) fail(line_no, "expected 'key = value' inside a section");
    r.set(section, trim(t.substr(0, eq)), trim(t.substr(eq + 3)));
  }
  return r;
}

}  // namespace blaschke_lab

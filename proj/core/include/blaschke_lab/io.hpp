#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blaschke_lab/disk.hpp"
#include "blaschke_lab/geninterp.hpp"

namespace blaschke_lab {

/// Malformed input text; the message names the offending line.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shortest decimal text that reads back to the same double (%.17g).
std::string format_double(double x);

/// Lines "re im mult"; '#' starts a comment line, blank lines are ignored.
void write_sequence(std::ostream& out, const FiniteSequence& s);
/// Throws ParseError on bad syntax, a point outside the disk, a
/// non-positive multiplicity or a repeated point.
FiniteSequence read_sequence(std::istream& in);
FiniteSequence read_sequence_file(const std::string& path);
void write_sequence_file(const std::string& path, const FiniteSequence& s);

/// Lines "cluster point order re im" holding raw derivatives f^(order).
/// Entries not listed are zero. Throws ParseError on bad indices or an
/// order at or above the multiplicity.
std::vector<HermiteJet> read_targets(std::istream& in, const ClusterPartition& part);
void write_targets(std::ostream& out, const ClusterPartition& part, const std::vector<HermiteJet>& jets);

/// Sectioned "key = value" report. Keys keep insertion order.
class Report {
 public:
  void set(const std::string& section, const std::string& key, const std::string& value);
  void set(const std::string& section, const std::string& key, double value);
  void set(const std::string& section, const std::string& key, long value);
  void set(const std::string& section, const std::string& key, int value) { set(section, key, static_cast<long>(value)); }
  void set(const std::string& section, const std::string& key, const char* value) {
    set(section, key, std::string(value));
  }

  /// Empty string when missing.
  std::string get(const std::string& section, const std::string& key) const;
  void write(std::ostream& out) const;
  static Report parse(std::istream& in);

  using Entries = std::vector<std::pair<std::string, std::string>>;
  const std::vector<std::pair<std::string, Entries>>& sections() const { return sections_; }

 private:
  std::vector<std::pair<std::string, Entries>> sections_;
};

}  // namespace blaschke_lab

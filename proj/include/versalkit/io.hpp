#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "versalkit/cycles.hpp"
#include "versalkit/det_pair.hpp"
#include "versalkit/groups.hpp"
#include "versalkit/local_ring.hpp"

namespace vk::io {

// path:line:col: message
struct ParseError : std::runtime_error {
  ParseError(std::string path, int line, int col, const std::string& message);
  std::string path;
  int line = 0;
  int col = 0;
  std::string message;
};

struct Entry {
  std::string key;
  std::string value;
  int line = 0;
  int col = 0;  // column of the value
};

struct Section {
  std::string name;
  int line = 0;
  std::vector<Entry> entries;
  const Entry* find(const std::string& key) const;
  std::vector<const Entry*> all(const std::string& key) const;
};

// Line-oriented text: "[section]" headers, "key = value" lines, '#' or ';' comments.
struct TextDoc {
  std::string path;
  std::vector<Section> sections;
  const Section* section(const std::string& name) const;
  const Section& require(const std::string& name) const;
  const Entry& require(const Section& s, const std::string& key) const;
  [[noreturn]] void fail(const Entry& e, const std::string& message) const;
  [[noreturn]] void fail(const Section& s, const std::string& message) const;
};

TextDoc parse_text(const std::string& text, const std::string& path = "<text>");
TextDoc read_doc(const std::string& path);

// directory named by VERSALKIT_FIXTURES, empty when unset
std::string fixture_root();
// a path relative to the referencing file, then to the fixture root
std::string resolve_reference(const TextDoc& from, const Entry& ref);

std::vector<std::string> split_list(const std::string& value, char sep = ',');
long long parse_integer(const TextDoc& doc, const Entry& e);
bool parse_bool(const TextDoc& doc, const Entry& e);
// integer, "z" or "z^k" for the primitive element
int parse_field_element(const Field& k, const std::string& text);

GroupModel model_from_doc(const TextDoc& doc);
GroupModel load_model(const std::string& path);

struct RingSpec {
  LocalRing ring = LocalRing::residue_field(Field::prime(2));
  std::optional<std::string> adjoin_c;
  std::string x = "x";
  std::string y = "y";
  std::optional<std::vector<std::string>> control_prime;
  std::string control_c;
};
RingSpec ring_from_doc(const TextDoc& doc);
RingSpec load_ring(const std::string& path);

struct PairSpec {
  std::shared_ptr<const GroupModel> model;
  RingPtr ring;
  DeterminantPair det;
  std::string kind;
};
PairSpec pair_from_doc(const TextDoc& doc);
PairSpec load_pair(const std::string& path);

// "2[(a,x)] + [(b)]" over the ambient, or "0" for the zero cycle of dimension dim
Cycle parse_cycle(const std::string& text, const std::vector<std::string>& ambient, int dim);

}  // namespace vk::io

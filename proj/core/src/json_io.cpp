#include "excseq/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace excseq {

using nlohmann::json;

json to_json(const Interval& x) { return json{{"i", x.i}, {"j", x.j}}; }

json to_json(const ShiftedObject& x) {
  return json{{"i", x.module.i}, {"j", x.module.j}, {"shift", x.shift}};
}

json to_json(const Chord& c) { return json::array({c.p, c.q}); }

json to_json(const NCTree& tree) {
  json chords = json::array();
  for (const Chord& c : tree.chords) chords.push_back(to_json(c));
  return json{{"n", tree.n}, {"chords", std::move(chords)}};
}

json to_json(const ExceptionalSequence& seq) {
  json objects = json::array();
  for (const ShiftedObject& obj : seq.objects) objects.push_back(to_json(obj));
  return json{{"n", seq.n}, {"objects", std::move(objects)}};
}

json class_key_to_json(const ClassKey& key) {
  json out = json::array();
  for (const Interval& x : key) out.push_back(json::array({x.i, x.j}));
  return out;
}

json to_json(const BijectionReport& report) {
  json missing = json::array();
  for (const NCTree& tree : report.missing_trees) missing.push_back(to_json(tree));
  json colliding = json::array();
  for (const ClassKey& key : report.colliding_classes) colliding.push_back(class_key_to_json(key));
  return json{{"n", report.n},
              {"sequence_class_count", report.sequence_class_count},
              {"tree_count", report.tree_count},
              {"matched", report.matched},
              {"missing_trees", std::move(missing)},
              {"colliding_classes", std::move(colliding)}};
}

namespace {

[[noreturn]] void bad(const std::string& what, const json& value) {
  throw std::invalid_argument(what + ": " + value.dump());
}

int int_field(const json& value, const char* key) {
  if (!value.is_object() || !value.contains(key) || !value[key].is_number_integer())
    bad(std::string("expected object with integer field '") + key + "'", value);
  return value[key].get<int>();
}

}  // namespace

Interval interval_from_json(const json& value, int n) {
  return Interval(n, int_field(value, "i"), int_field(value, "j"));
}

ShiftedObject shifted_object_from_json(const json& value, int n) {
  int shift = 0;
  if (value.is_object() && value.contains("shift")) {
    if (!value["shift"].is_number_integer()) bad("'shift' must be an integer", value);
    shift = value["shift"].get<int>();
  }
  return ShiftedObject(interval_from_json(value, n), shift);
}

Chord chord_from_json(const json& value, int n) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
      !value[1].is_number_integer())
    bad("a chord is a two-element integer array", value);
  return Chord(n, value[0].get<int>(), value[1].get<int>());
}

NCTree nc_tree_from_json(const json& value) {
  const int n = checked_rank(int_field(value, "n"));
  if (!value.contains("chords") || !value["chords"].is_array())
    bad("expected a 'chords' array", value);
  NCTree tree{n, {}};
  for (const json& entry : value["chords"]) tree.chords.push_back(chord_from_json(entry, n));
  std::sort(tree.chords.begin(), tree.chords.end());
  return tree;
}

ExceptionalSequence sequence_from_json(const json& value) {
  const int n = checked_rank(int_field(value, "n"));
  if (!value.contains("objects") || !value["objects"].is_array())
    bad("expected an 'objects' array", value);
  ExceptionalSequence seq{n, {}};
  for (const json& entry : value["objects"])
    seq.objects.push_back(shifted_object_from_json(entry, n));
  return seq;
}

}  // namespace excseq

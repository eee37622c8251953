#pragma once

#include <nlohmann/json.hpp>

#include "excseq/bijection.hpp"
#include "excseq/chord.hpp"
#include "excseq/exceptional.hpp"
#include "excseq/interval.hpp"
#include "excseq/nc_tree.hpp"

namespace excseq {

// Wire formats (n travels on the containers, not the elements):
//   Interval            {"i": int, "j": int}
//   ShiftedObject       {"i": int, "j": int, "shift": int}
//   Chord               [p, q] with p < q
//   NCTree              {"n": int, "chords": [[p,q], ...]} sorted
//   ExceptionalSequence {"n": int, "objects": [ShiftedObject, ...]}
//   ClassKey            [[i,j], ...] sorted

nlohmann::json to_json(const Interval& x);
nlohmann::json to_json(const ShiftedObject& x);
nlohmann::json to_json(const Chord& c);
nlohmann::json to_json(const NCTree& tree);
nlohmann::json to_json(const ExceptionalSequence& seq);
nlohmann::json class_key_to_json(const ClassKey& key);
nlohmann::json to_json(const BijectionReport& report);

// Parsers throw std::invalid_argument with a description on malformed
// input.  Semantic validation (tree-ness, exceptionality) stays with the
// operations that require it.
Interval interval_from_json(const nlohmann::json& value, int n);
ShiftedObject shifted_object_from_json(const nlohmann::json& value, int n);  // "shift" optional, default 0
Chord chord_from_json(const nlohmann::json& value, int n);
NCTree nc_tree_from_json(const nlohmann::json& value);
ExceptionalSequence sequence_from_json(const nlohmann::json& value);

}  // namespace excseq

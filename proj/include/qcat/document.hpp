#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "qcat/sequences.hpp"
#include "qcat/ultra.hpp"

namespace qcat {

struct QuantaleEntry {
  QuantalePtr q;
  std::string builtin;  // empty when given explicitly
};

struct CategoryEntry {
  std::string quantale;
  VCategory cat;
};

/// Structure rows are indexed by the principal ultrafilters, in object order.
struct UCategoryEntry {
  std::string quantale;
  UCategory cat;
};

struct SequenceEntry {
  std::string category;
  EvPeriodicSeq seq;
};

struct WeightEntry {
  std::string category;  // a category or a U-category
  Side side = Side::Left;
  Weight values;
  bool on_ucategory = false;
};

/// kind: "functor" (categories), "ufunctor" (U-categories) or "lax" (quantales).
struct MorphismEntry {
  std::string kind;
  std::string source;
  std::string target;
  std::vector<int> map;
};

struct Document {
  std::map<std::string, QuantaleEntry> quantales;
  std::map<std::string, CategoryEntry> categories;
  std::map<std::string, UCategoryEntry> ucategories;
  std::map<std::string, SequenceEntry> sequences;
  std::map<std::string, WeightEntry> weights;
  std::map<std::string, MorphismEntry> morphisms;

  const CategoryEntry& category(const std::string& name) const;
  const UCategoryEntry& ucategory(const std::string& name) const;
  const QuantaleEntry& quantale(const std::string& name) const;
  const WeightEntry& weight(const std::string& name) const;
  const SequenceEntry& sequence(const std::string& name) const;
  const MorphismEntry& morphism(const std::string& name) const;
};

/// Validates everything; errors are collected with their JSON paths and raised
/// together as ParseError (malformed input) or ValidationError (invalid structure).
Document parse_document(const nlohmann::json& j);
Document parse_document_text(const std::string& text);
Document load_document(const std::string& path);

nlohmann::json to_json(const Document& doc);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize(const Document& doc);
bool operator==(const Document& a, const Document& b);

nlohmann::json quantale_json(const Quantale& q);

}  // namespace qcat

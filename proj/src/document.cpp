#include "qcat/document.hpp"

#include <fstream>
#include <sstream>

namespace qcat {

using nlohmann::json;

namespace {

struct Collector {
  std::vector<std::string> messages;
  bool parse_error = false;
  std::vector<int> first_witness;

  void add(const std::string& path, const std::string& message, bool is_parse, std::vector<int> witness = {}) {
    messages.push_back(path + ": " + message);
    parse_error = parse_error || is_parse;
    if (first_witness.empty()) first_witness = std::move(witness);
  }
};

/// Thrown inside a single entry; caught per entry and collected.
struct EntryError {
  std::string path;
  std::string message;
  bool parse;
  std::vector<int> witness;
};

[[noreturn]] void malformed(const std::string& path, const std::string& message) {
  throw EntryError{path, message, true, {}};
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) malformed(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) malformed(path, "missing field '" + key + "'");
  return *it;
}

std::string string_field(const json& obj, const std::string& key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_string()) malformed(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& path) {
  if (!v.is_array()) malformed(path, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) malformed(path + "/" + std::to_string(i), "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

int element(const Quantale& q, const json& v, const std::string& path) {
  if (!v.is_string()) malformed(path, "expected an element name");
  const std::string name = v.get<std::string>();
  for (int u = 0; u < q.size(); ++u)
    if (q.name(u) == name) return u;
  malformed(path, "unknown element '" + name + "' of " + q.label());
}

int object(const std::vector<std::string>& objects, const json& v, const std::string& path) {
  if (!v.is_string()) malformed(path, "expected an object name");
  const std::string name = v.get<std::string>();
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return static_cast<int>(i);
  malformed(path, "unknown object '" + name + "'");
}

std::vector<int> object_list(const std::vector<std::string>& objects, const json& v, const std::string& path) {
  if (!v.is_array()) malformed(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(object(objects, v[i], path + "/" + std::to_string(i)));
  return out;
}

IndexMatrix element_matrix(const Quantale& q, const json& v, int rows, int cols, const std::string& path) {
  if (!v.is_array() || static_cast<int>(v.size()) != rows)
    malformed(path, "expected " + std::to_string(rows) + " rows");
  IndexMatrix m(rows);
  for (int r = 0; r < rows; ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    if (!v[r].is_array() || static_cast<int>(v[r].size()) != cols)
      malformed(rp, "expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) m[r].push_back(element(q, v[r][c], rp + "/" + std::to_string(c)));
  }
  return m;
}

template <class Fn>
void guarded(Collector& errors, const std::string& path, Fn&& fn) {
  try {
    fn();
  } catch (const EntryError& e) {
    errors.add(e.path, e.message, e.parse, e.witness);
  } catch (const Error& e) {
    errors.add(path, e.what(), e.kind() == ErrorKind::ParseError, e.witness());
  } catch (const json::exception& e) {
    errors.add(path, e.what(), true);
  }
}

const json& section(const json& j, const char* key) {
  static const json empty = json::object();
  auto it = j.find(key);
  return it == j.end() ? empty : *it;
}

QuantaleEntry parse_quantale(const json& v, const std::string& name, const std::string& path) {
  if (!v.is_object()) malformed(path, "expected an object");
  if (v.contains("builtin")) {
    const std::string expr = string_field(v, "builtin", path);
    return QuantaleEntry{builtin(expr), expr};
  }
  const auto elements = string_list(field(v, "elements", path), path + "/elements");
  const int n = static_cast<int>(elements.size());
  const json& leq = field(v, "leq", path);
  if (!leq.is_array() || static_cast<int>(leq.size()) != n) malformed(path + "/leq", "expected an n x n 0/1 matrix");
  BoolMatrix order(n, std::vector<bool>(n));
  for (int r = 0; r < n; ++r) {
    if (!leq[r].is_array() || static_cast<int>(leq[r].size()) != n)
      malformed(path + "/leq/" + std::to_string(r), "expected " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) {
      const json& cell = leq[r][c];
      if (!cell.is_number_integer() || (cell.get<int>() != 0 && cell.get<int>() != 1))
        malformed(path + "/leq/" + std::to_string(r) + "/" + std::to_string(c), "expected 0 or 1");
      order[r][c] = cell.get<int>() == 1;
    }
  }
  FiniteLattice lattice = validate_lattice(order, elements);
  const std::string unit_name = string_field(v, "unit", path);
  const int unit = lattice.index_of(unit_name);
  const json& tj = field(v, "tensor", path);
  if (!tj.is_array() || static_cast<int>(tj.size()) != n) malformed(path + "/tensor", "expected n rows");
  IndexMatrix tensor(n);
  for (int r = 0; r < n; ++r) {
    if (!tj[r].is_array() || static_cast<int>(tj[r].size()) != n)
      malformed(path + "/tensor/" + std::to_string(r), "expected n entries");
    for (int c = 0; c < n; ++c) {
      const json& cell = tj[r][c];
      if (!cell.is_string()) malformed(path + "/tensor/" + std::to_string(r) + "/" + std::to_string(c), "expected a name");
      tensor[r].push_back(lattice.index_of(cell.get<std::string>()));
    }
  }
  return QuantaleEntry{validate_quantale(std::move(lattice), tensor, unit, name), ""};
}

json element_rows(const VRelation& r) {
  json rows = json::array();
  for (int s = 0; s < r.src(); ++s) {
    json row = json::array();
    for (int t = 0; t < r.tgt(); ++t) row.push_back(r.q().name(r(s, t)));
    rows.push_back(row);
  }
  return rows;
}

json name_list(const std::vector<std::string>& names, const std::vector<int>& idx) {
  json out = json::array();
  for (int i : idx) out.push_back(names[i]);
  return out;
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorKind::InvalidArgument, std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

}  // namespace

const CategoryEntry& Document::category(const std::string& n) const { return lookup(categories, n, "category"); }
const UCategoryEntry& Document::ucategory(const std::string& n) const { return lookup(ucategories, n, "U-category"); }
const QuantaleEntry& Document::quantale(const std::string& n) const { return lookup(quantales, n, "quantale"); }
const WeightEntry& Document::weight(const std::string& n) const { return lookup(weights, n, "weight"); }
const SequenceEntry& Document::sequence(const std::string& n) const { return lookup(sequences, n, "sequence"); }
const MorphismEntry& Document::morphism(const std::string& n) const { return lookup(morphisms, n, "morphism"); }

Document parse_document(const json& j) {
  Document doc;
  Collector errors;
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "/: document must be a JSON object");
  static const std::vector<std::string> known{"quantales", "categories", "ucategories", "sequences", "weights", "morphisms"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      errors.add("/" + it.key(), "unknown section", true);
    else if (!it.value().is_object())
      errors.add("/" + it.key(), "expected an object of named entries", true);
  }
  const auto entries = [&](const char* key) -> const json& {
    const json& s = section(j, key);
    static const json empty = json::object();
    return s.is_object() ? s : empty;
  };

  for (const auto& [name, v] : entries("quantales").items()) {
    const std::string path = "/quantales/" + name;
    guarded(errors, path, [&] { doc.quantales.emplace(name, parse_quantale(v, name, path)); });
  }
  const auto quantale_ref = [&](const json& v, const std::string& path) -> std::pair<std::string, QuantalePtr> {
    const std::string qn = string_field(v, "quantale", path);
    auto it = doc.quantales.find(qn);
    if (it == doc.quantales.end()) throw EntryError{path + "/quantale", "undefined quantale '" + qn + "'", false, {}};
    return {qn, it->second.q};
  };

  for (const auto& [name, v] : entries("categories").items()) {
    const std::string path = "/categories/" + name;
    guarded(errors, path, [&] {
      auto [qn, q] = quantale_ref(v, path);
      const auto objects = string_list(field(v, "objects", path), path + "/objects");
      const int n = static_cast<int>(objects.size());
      IndexMatrix m = element_matrix(*q, field(v, "structure", path), n, n, path + "/structure");
      try {
        doc.categories.emplace(name, CategoryEntry{qn, validate_category(VRelation(q, m), objects)});
      } catch (const Error& e) {
        throw EntryError{path, e.what(), false, e.witness()};
      }
    });
  }

  for (const auto& [name, v] : entries("ucategories").items()) {
    const std::string path = "/ucategories/" + name;
    guarded(errors, path, [&] {
      auto [qn, q] = quantale_ref(v, path);
      const auto objects = string_list(field(v, "objects", path), path + "/objects");
      const int n = static_cast<int>(objects.size());
      IndexMatrix m = element_matrix(*q, field(v, "structure", path), n, n, path + "/structure");
      const auto e = e_map(n);
      VRelation a(q, n, n);
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) a.set(e[s], t, m[s][t]);
      try {
        doc.ucategories.emplace(name, UCategoryEntry{qn, validate_ucategory(std::move(a), objects)});
      } catch (const Error& ex) {
        throw EntryError{path, ex.what(), false, ex.witness()};
      }
    });
  }

  for (const auto& [name, v] : entries("morphisms").items()) {
    const std::string path = "/morphisms/" + name;
    guarded(errors, path, [&] {
      MorphismEntry m{string_field(v, "kind", path), string_field(v, "source", path), string_field(v, "target", path), {}};
      const json& map = field(v, "map", path);
      if (m.kind == "lax") {
        auto s = doc.quantales.find(m.source), t = doc.quantales.find(m.target);
        if (s == doc.quantales.end() || t == doc.quantales.end())
          throw EntryError{path, "undefined quantale in lax morphism", false, {}};
        if (!map.is_array() || static_cast<int>(map.size()) != s->second.q->size())
          malformed(path + "/map", "expected one image per element");
        for (std::size_t i = 0; i < map.size(); ++i)
          m.map.push_back(element(*t->second.q, map[i], path + "/map/" + std::to_string(i)));
        try {
          make_lax_morphism(m.map, s->second.q, t->second.q);
        } catch (const Error& e) {
          throw EntryError{path, e.what(), false, e.witness()};
        }
      } else if (m.kind == "functor" || m.kind == "ufunctor") {
        const bool u = m.kind == "ufunctor";
        const std::vector<std::string>* src_objects = nullptr;
        const std::vector<std::string>* tgt_objects = nullptr;
        if (u) {
          auto s = doc.ucategories.find(m.source), t = doc.ucategories.find(m.target);
          if (s == doc.ucategories.end() || t == doc.ucategories.end())
            throw EntryError{path, "undefined U-category in U-functor", false, {}};
          src_objects = &s->second.cat.objects;
          tgt_objects = &t->second.cat.objects;
        } else {
          auto s = doc.categories.find(m.source), t = doc.categories.find(m.target);
          if (s == doc.categories.end() || t == doc.categories.end())
            throw EntryError{path, "undefined category in functor", false, {}};
          src_objects = &s->second.cat.objects;
          tgt_objects = &t->second.cat.objects;
        }
        m.map = object_list(*tgt_objects, map, path + "/map");
        if (m.map.size() != src_objects->size()) malformed(path + "/map", "expected one image per object");
        const CheckReport r = u ? is_ufunctor(m.map, doc.ucategories.at(m.source).cat, doc.ucategories.at(m.target).cat)
                                : is_functor(m.map, doc.categories.at(m.source).cat, doc.categories.at(m.target).cat);
        if (!r) throw EntryError{path, "not a " + m.kind + ": " + r.law + " fails", false, r.witness};
      } else {
        malformed(path + "/kind", "kind must be functor, ufunctor or lax");
      }
      doc.morphisms.emplace(name, std::move(m));
    });
  }

  for (const auto& [name, v] : entries("weights").items()) {
    const std::string path = "/weights/" + name;
    guarded(errors, path, [&] {
      WeightEntry w;
      w.category = string_field(v, "category", path);
      const std::string side = string_field(v, "side", path);
      if (side != "left" && side != "right") malformed(path + "/side", "side must be left or right");
      w.side = side == "left" ? Side::Left : Side::Right;
      const json& values = field(v, "values", path);
      const VCategory* c = nullptr;
      const UCategory* u = nullptr;
      if (auto it = doc.categories.find(w.category); it != doc.categories.end())
        c = &it->second.cat;
      else if (auto ut = doc.ucategories.find(w.category); ut != doc.ucategories.end())
        u = &ut->second.cat;
      else
        throw EntryError{path + "/category", "undefined category '" + w.category + "'", false, {}};
      const Quantale& q = c ? c->q() : u->q();
      const int n = c ? c->size() : u->size();
      if (!values.is_array() || static_cast<int>(values.size()) != n)
        malformed(path + "/values", "expected " + std::to_string(n) + " values");
      for (std::size_t i = 0; i < values.size(); ++i)
        w.values.push_back(element(q, values[i], path + "/values/" + std::to_string(i)));
      w.on_ucategory = u != nullptr;
      const CheckReport r = c ? is_weight(*c, w.values, w.side) : is_uweight(*u, w.values, w.side);
      if (!r) throw EntryError{path, "not a weight: " + r.law + " fails", false, r.witness};
      doc.weights.emplace(name, std::move(w));
    });
  }

  for (const auto& [name, v] : entries("sequences").items()) {
    const std::string path = "/sequences/" + name;
    guarded(errors, path, [&] {
      SequenceEntry s;
      s.category = string_field(v, "category", path);
      auto it = doc.categories.find(s.category);
      if (it == doc.categories.end())
        throw EntryError{path + "/category", "undefined category '" + s.category + "'", false, {}};
      const auto& objects = it->second.cat.objects;
      s.seq.pre = object_list(objects, field(v, "pre", path), path + "/pre");
      s.seq.per = object_list(objects, field(v, "per", path), path + "/per");
      if (s.seq.per.empty()) throw EntryError{path + "/per", "period must be nonempty", false, {}};
      doc.sequences.emplace(name, std::move(s));
    });
  }

  if (!errors.messages.empty()) {
    std::string msg;
    for (const auto& m : errors.messages) msg += (msg.empty() ? "" : "\n") + m;
    throw Error(errors.parse_error ? ErrorKind::ParseError : ErrorKind::ValidationError, msg, errors.first_witness);
  }
  return doc;
}

Document parse_document_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return parse_document(j);
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document_text(ss.str());
}

json quantale_json(const Quantale& q) {
  json out;
  out["elements"] = q.lattice().names();
  json leq = json::array(), tensor = json::array();
  for (int u = 0; u < q.size(); ++u) {
    json lr = json::array(), tr = json::array();
    for (int v = 0; v < q.size(); ++v) {
      lr.push_back(q.leq(u, v) ? 1 : 0);
      tr.push_back(q.name(q.tensor(u, v)));
    }
    leq.push_back(lr);
    tensor.push_back(tr);
  }
  out["leq"] = leq;
  out["tensor"] = tensor;
  out["unit"] = q.name(q.unit());
  return out;
}

json to_json(const Document& doc) {
  json j = json::object();
  if (!doc.quantales.empty()) {
    json& s = j["quantales"];
    for (const auto& [name, e] : doc.quantales)
      s[name] = e.builtin.empty() ? quantale_json(*e.q) : json{{"builtin", e.builtin}};
  }
  if (!doc.categories.empty()) {
    json& s = j["categories"];
    for (const auto& [name, e] : doc.categories)
      s[name] = {{"quantale", e.quantale}, {"objects", e.cat.objects}, {"structure", element_rows(e.cat.a)}};
  }
  if (!doc.ucategories.empty()) {
    json& s = j["ucategories"];
    for (const auto& [name, e] : doc.ucategories) {
      const auto ex = e_map(e.cat.size());
      VRelation rows(e.cat.quantale(), e.cat.size(), e.cat.size());
      for (int p = 0; p < e.cat.size(); ++p)
        for (int t = 0; t < e.cat.size(); ++t) rows.set(p, t, e.cat(ex[p], t));
      s[name] = {{"quantale", e.quantale}, {"objects", e.cat.objects}, {"structure", element_rows(rows)}};
    }
  }
  if (!doc.morphisms.empty()) {
    json& s = j["morphisms"];
    for (const auto& [name, m] : doc.morphisms) {
      json map = json::array();
      if (m.kind == "lax") {
        for (int v : m.map) map.push_back(doc.quantales.at(m.target).q->name(v));
      } else {
        const auto& objects = m.kind == "functor" ? doc.categories.at(m.target).cat.objects
                                                  : doc.ucategories.at(m.target).cat.objects;
        map = name_list(objects, m.map);
      }
      s[name] = {{"kind", m.kind}, {"source", m.source}, {"target", m.target}, {"map", map}};
    }
  }
  if (!doc.weights.empty()) {
    json& s = j["weights"];
    for (const auto& [name, w] : doc.weights) {
      const Quantale& q = w.on_ucategory ? doc.ucategories.at(w.category).cat.q() : doc.categories.at(w.category).cat.q();
      json values = json::array();
      for (int v : w.values) values.push_back(q.name(v));
      s[name] = {{"category", w.category}, {"side", to_string(w.side)}, {"values", values}};
    }
  }
  if (!doc.sequences.empty()) {
    json& s = j["sequences"];
    for (const auto& [name, e] : doc.sequences) {
      const auto& objects = doc.categories.at(e.category).cat.objects;
      s[name] = {{"category", e.category}, {"pre", name_list(objects, e.seq.pre)}, {"per", name_list(objects, e.seq.per)}};
    }
  }
  return j;
}

std::string serialize(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

bool operator==(const Document& a, const Document& b) { return to_json(a) == to_json(b); }

}  // namespace qcat

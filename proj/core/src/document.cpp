#include "dyb/document.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "json.hpp"

namespace dyb {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const std::map<std::string, std::vector<std::string>>& kind_tables() {
  static const std::map<std::string, std::vector<std::string>> k = {
      {"dynamical_group", {"phi", "product"}},
      {"post_group", {"dot", "phi", "tri"}},
      {"skew_brace", {"circ", "dot", "phi"}},
      {"braided_group", {"lharp", "phi", "product", "rharp"}},
      {"action", {"dot", "phi", "phi_act", "product"}},
      {"rbo", {"b_map", "dot", "phi", "phi_act", "product"}},
  };
  return k;
}

std::vector<std::string> parse_labels(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw ParseError(field + ": expected a non-empty array of labels");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw ParseError(field + "[" + std::to_string(i) + "]: expected a string");
    std::string s = j[i].get<std::string>();
    if (!seen.insert(s).second)
      throw ParseError(field + ": duplicate label '" + s + "'");
    out.push_back(std::move(s));
  }
  return out;
}

int label_index(const std::vector<std::string>& labels, const json& j,
                const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a label string");
  std::string s = j.get<std::string>();
  auto it = std::find(labels.begin(), labels.end(), s);
  if (it == labels.end())
    throw ParseError(path + ": unknown label '" + s + "'");
  return static_cast<int>(it - labels.begin());
}

Table2 parse_table2(const json& j, int d0, int d1,
                    const std::vector<std::string>& value_labels,
                    const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != d0)
    throw ParseError(path + ": expected " + std::to_string(d0) + " rows");
  Table2 t(d0, d1);
  for (int i = 0; i < d0; ++i) {
    const json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != d1)
      throw ParseError(path + "[" + std::to_string(i) + "]: expected " +
                       std::to_string(d1) + " entries");
    for (int k = 0; k < d1; ++k)
      t.at(i, k) = label_index(value_labels, row[static_cast<size_t>(k)],
                               path + "[" + std::to_string(i) + "][" +
                                   std::to_string(k) + "]");
  }
  return t;
}

Table3 parse_table3(const json& j, int d0, int d1, int d2,
                    const std::vector<std::string>& value_labels,
                    const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != d0)
    throw ParseError(path + ": expected " + std::to_string(d0) + " slices");
  Table3 t(d0, d1, d2);
  for (int i = 0; i < d0; ++i) {
    const json& slice = j[static_cast<size_t>(i)];
    if (!slice.is_array() || static_cast<int>(slice.size()) != d1)
      throw ParseError(path + "[" + std::to_string(i) + "]: expected " +
                       std::to_string(d1) + " rows");
    for (int a = 0; a < d1; ++a) {
      const json& row = slice[static_cast<size_t>(a)];
      if (!row.is_array() || static_cast<int>(row.size()) != d2)
        throw ParseError(path + "[" + std::to_string(i) + "][" +
                         std::to_string(a) + "]: expected " + std::to_string(d2) +
                         " entries");
      for (int b = 0; b < d2; ++b)
        t.at(i, a, b) =
            label_index(value_labels, row[static_cast<size_t>(b)],
                        path + "[" + std::to_string(i) + "][" + std::to_string(a) +
                            "][" + std::to_string(b) + "]");
    }
  }
  return t;
}

ordered_json render_table2(const Table2& t, const std::vector<std::string>& value_labels) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < t.dim0(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < t.dim1(); ++k)
      row.push_back(value_labels[static_cast<size_t>(t.at(i, k))]);
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json render_table3(const Table3& t, const std::vector<std::string>& value_labels) {
  ordered_json slices = ordered_json::array();
  for (int i = 0; i < t.dim0(); ++i) {
    ordered_json slice = ordered_json::array();
    for (int a = 0; a < t.dim1(); ++a) {
      ordered_json row = ordered_json::array();
      for (int b = 0; b < t.dim2(); ++b)
        row.push_back(value_labels[static_cast<size_t>(t.at(i, a, b))]);
      slice.push_back(std::move(row));
    }
    slices.push_back(std::move(slice));
  }
  return slices;
}

}  // namespace

StructureDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level: expected an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("kind: required string field");

  StructureDocument doc;
  doc.kind = j["kind"].get<std::string>();
  auto kt = kind_tables().find(doc.kind);
  if (kt == kind_tables().end()) throw ParseError("kind: unknown kind '" + doc.kind + "'");

  std::set<std::string> allowed = {"kind", "lambda_labels", "elem_labels", "unit",
                                   "metadata"};
  for (const auto& t : kt->second) allowed.insert(t);
  for (auto it = j.begin(); it != j.end(); ++it) {
    // inverse tables are always derived; supplied ones are dropped loudly
    if (it.key() == "inverse" || it.key() == "dot_inverse" ||
        it.key() == "circ_inverse") {
      std::fputs(("warning: ignoring user-supplied table '" + it.key() +
                  "'; inverses are derived\n")
                     .c_str(),
                 stderr);
      continue;
    }
    if (!allowed.count(it.key()))
      throw ParseError("top level: unknown field '" + it.key() + "'");
  }
  for (const auto& field : {"lambda_labels", "elem_labels", "unit"})
    if (!j.contains(field))
      throw ParseError(std::string(field) + ": required field missing");

  doc.lambda_labels = parse_labels(j["lambda_labels"], "lambda_labels");
  doc.elem_labels = parse_labels(j["elem_labels"], "elem_labels");
  doc.unit = label_index(doc.elem_labels, j["unit"], "unit");

  const int l = doc.l(), n = doc.n();
  for (const auto& name : kt->second) {
    if (!j.contains(name)) throw ParseError(name + ": required table missing");
    if (name == "phi")
      doc.tables2["phi"] = parse_table2(j[name], l, n, doc.lambda_labels, name);
    else if (name == "b_map") {
      json wrapped = json::array({j[name]});
      doc.tables2["b_map"] = parse_table2(wrapped, 1, n, doc.elem_labels, name);
    } else
      doc.tables3[name] = parse_table3(j[name], l, n, n, doc.elem_labels, name);
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw ParseError("metadata: expected an object");
    doc.metadata = j["metadata"].dump();
  } else {
    doc.metadata = "{}";
  }
  return doc;
}

std::string serialize_document(const StructureDocument& doc) {
  auto kt = kind_tables().find(doc.kind);
  if (kt == kind_tables().end())
    throw ParseError("serialize: unknown kind '" + doc.kind + "'");
  ordered_json out;
  out["kind"] = doc.kind;
  out["lambda_labels"] = doc.lambda_labels;
  out["elem_labels"] = doc.elem_labels;
  out["unit"] = doc.elem_labels[static_cast<size_t>(doc.unit)];
  for (const auto& name : kt->second) {
    if (name == "phi")
      out[name] = render_table2(doc.tables2.at("phi"), doc.lambda_labels);
    else if (name == "b_map")
      out[name] = render_table2(doc.tables2.at("b_map"), doc.elem_labels)[0];
    else
      out[name] = render_table3(doc.tables3.at(name), doc.elem_labels);
  }
  out["metadata"] = json::parse(doc.metadata.empty() ? "{}" : doc.metadata);
  return out.dump() + "\n";
}

std::vector<std::string> default_lambda_labels(int l) {
  std::vector<std::string> out;
  for (int i = 0; i < l; ++i) out.push_back("l" + std::to_string(i));
  return out;
}

std::vector<std::string> default_elem_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

namespace {

void fill_labels(std::vector<std::string>& lambda_labels,
                 std::vector<std::string>& elem_labels, int l, int n) {
  if (lambda_labels.empty()) lambda_labels = default_lambda_labels(l);
  if (elem_labels.empty()) elem_labels = default_elem_labels(n);
  if (static_cast<int>(lambda_labels.size()) != l ||
      static_cast<int>(elem_labels.size()) != n)
    throw ShapeError("to_doc: label list sizes do not match the structure");
}

}  // namespace

DynGroup doc_to_group(const StructureDocument& doc) {
  if (doc.kind != "dynamical_group" && doc.kind != "braided_group")
    throw ParseError("doc_to_group: kind '" + doc.kind + "' has no group tables");
  return DynGroup(DynSet(doc.l(), doc.n(), doc.tables2.at("phi")),
                  doc.tables3.at("product"), doc.unit);
}

PostGroup doc_to_post(const StructureDocument& doc) {
  if (doc.kind != "post_group")
    throw ParseError("doc_to_post: expected kind post_group, got '" + doc.kind + "'");
  return PostGroup(DynSet(doc.l(), doc.n(), doc.tables2.at("phi")),
                   doc.tables3.at("dot"), doc.tables3.at("tri"), doc.unit);
}

SkewBrace doc_to_brace(const StructureDocument& doc) {
  if (doc.kind != "skew_brace")
    throw ParseError("doc_to_brace: expected kind skew_brace, got '" + doc.kind + "'");
  return SkewBrace(DynSet(doc.l(), doc.n(), doc.tables2.at("phi")),
                   doc.tables3.at("dot"), doc.tables3.at("circ"), doc.unit);
}

BraidedGroup doc_to_braided(const StructureDocument& doc) {
  if (doc.kind != "braided_group")
    throw ParseError("doc_to_braided: expected kind braided_group, got '" +
                     doc.kind + "'");
  DynGroup g(DynSet(doc.l(), doc.n(), doc.tables2.at("phi")),
             doc.tables3.at("product"), doc.unit);
  return BraidedGroup(std::move(g), doc.tables3.at("rharp"), doc.tables3.at("lharp"));
}

DynAction doc_to_action(const StructureDocument& doc) {
  if (doc.kind != "action" && doc.kind != "rbo")
    throw ParseError("doc_to_action: expected kind action or rbo, got '" +
                     doc.kind + "'");
  const int l = doc.l(), n = doc.n();
  DynGroup g(DynSet(l, n, doc.tables2.at("phi")), doc.tables3.at("product"), doc.unit);
  Table2 const_phi(l, n);
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < n; ++x) const_phi.at(lam, x) = lam;
  DynGroup h(DynSet(l, n, std::move(const_phi)), doc.tables3.at("dot"), doc.unit);
  return DynAction(std::move(g), std::move(h), doc.tables3.at("phi_act"));
}

RelRBO doc_to_rbo(const StructureDocument& doc) {
  if (doc.kind != "rbo")
    throw ParseError("doc_to_rbo: expected kind rbo, got '" + doc.kind + "'");
  DynAction act = doc_to_action(doc);
  const Table2& b = doc.tables2.at("b_map");
  std::vector<int> b_map(static_cast<size_t>(doc.n()));
  for (int x = 0; x < doc.n(); ++x) b_map[static_cast<size_t>(x)] = b.at(0, x);
  return RelRBO(std::move(act), std::move(b_map));
}

StructureDocument group_to_doc(const DynGroup& g, std::vector<std::string> ll,
                               std::vector<std::string> el) {
  fill_labels(ll, el, g.l(), g.n());
  StructureDocument doc;
  doc.kind = "dynamical_group";
  doc.lambda_labels = std::move(ll);
  doc.elem_labels = std::move(el);
  doc.unit = g.unit;
  doc.tables2["phi"] = g.base.phi;
  doc.tables3["product"] = g.product;
  doc.metadata = "{}";
  return doc;
}

StructureDocument post_to_doc(const PostGroup& p, std::vector<std::string> ll,
                              std::vector<std::string> el) {
  fill_labels(ll, el, p.l(), p.n());
  StructureDocument doc;
  doc.kind = "post_group";
  doc.lambda_labels = std::move(ll);
  doc.elem_labels = std::move(el);
  doc.unit = p.unit;
  doc.tables2["phi"] = p.base.phi;
  doc.tables3["dot"] = p.dot;
  doc.tables3["tri"] = p.tri;
  doc.metadata = "{}";
  return doc;
}

StructureDocument brace_to_doc(const SkewBrace& s, std::vector<std::string> ll,
                               std::vector<std::string> el) {
  fill_labels(ll, el, s.l(), s.n());
  StructureDocument doc;
  doc.kind = "skew_brace";
  doc.lambda_labels = std::move(ll);
  doc.elem_labels = std::move(el);
  doc.unit = s.unit;
  doc.tables2["phi"] = s.base.phi;
  doc.tables3["dot"] = s.dot;
  doc.tables3["circ"] = s.circ;
  doc.metadata = "{}";
  return doc;
}

StructureDocument braided_to_doc(const BraidedGroup& b, std::vector<std::string> ll,
                                 std::vector<std::string> el) {
  fill_labels(ll, el, b.g.l(), b.g.n());
  StructureDocument doc;
  doc.kind = "braided_group";
  doc.lambda_labels = std::move(ll);
  doc.elem_labels = std::move(el);
  doc.unit = b.g.unit;
  doc.tables2["phi"] = b.g.base.phi;
  doc.tables3["product"] = b.g.product;
  doc.tables3["rharp"] = b.rharp;
  doc.tables3["lharp"] = b.lharp;
  doc.metadata = "{}";
  return doc;
}

StructureDocument rbo_to_doc(const RelRBO& r, std::vector<std::string> ll,
                             std::vector<std::string> el) {
  const DynGroup& g = r.action.g;
  if (r.action.h.n() != g.n())
    throw ShapeError("rbo_to_doc: the document schema requires |H| = |G|");
  fill_labels(ll, el, g.l(), g.n());
  StructureDocument doc;
  doc.kind = "rbo";
  doc.lambda_labels = std::move(ll);
  doc.elem_labels = std::move(el);
  doc.unit = g.unit;
  doc.tables2["phi"] = g.base.phi;
  doc.tables3["product"] = g.product;
  doc.tables3["dot"] = r.action.h.product;
  doc.tables3["phi_act"] = r.action.act;
  Table2 b(1, g.n());
  for (int x = 0; x < g.n(); ++x) b.at(0, x) = r.b(x);
  doc.tables2["b_map"] = std::move(b);
  doc.metadata = "{}";
  return doc;
}

StructureDocument structure_to_doc(const Structure& s) {
  return std::visit(
      [](const auto& v) -> StructureDocument {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DynGroup>) return group_to_doc(v);
        else if constexpr (std::is_same_v<T, PostGroup>) return post_to_doc(v);
        else if constexpr (std::is_same_v<T, SkewBrace>) return brace_to_doc(v);
        else return braided_to_doc(v);
      },
      s);
}

}  // namespace dyb

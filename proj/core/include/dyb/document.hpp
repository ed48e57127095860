#ifndef DYB_DOCUMENT_HPP
#define DYB_DOCUMENT_HPP

#include <map>
#include <string>
#include <vector>

#include "dyb/core.hpp"
#include "dyb/matched.hpp"
#include "dyb/postbrace.hpp"
#include "dyb/rota.hpp"
#include "dyb/search.hpp"

// One JSON document schema for every structure kind, discriminated by
// `kind`. Canonical serialization order is kind, lambda_labels, elem_labels,
// unit, tables in alphabetical key order, metadata last; parse-serialize is
// byte-identical for canonical input and unknown top-level fields are
// rejected.
//
// Kinds and their tables:
//   dynamical_group  phi, product
//   post_group       phi, dot, tri
//   skew_brace       phi, dot, circ
//   braided_group    phi, product, rharp, lharp
//   action           phi, product, dot, phi_act
//   rbo              phi, product, dot, phi_act, b_map
// Action and rbo documents carry the acted-on constant group on the same
// element label set as the group.

namespace dyb {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StructureDocument {
  std::string kind;
  std::vector<std::string> lambda_labels;
  std::vector<std::string> elem_labels;
  int unit = -1;                          // index into elem_labels
  std::map<std::string, Table2> tables2;  // phi; b_map stored 1 x N
  std::map<std::string, Table3> tables3;  // everything three-indexed
  std::string metadata;                   // canonical JSON text, "{}" if absent

  int l() const { return static_cast<int>(lambda_labels.size()); }
  int n() const { return static_cast<int>(elem_labels.size()); }
};

StructureDocument parse_document(const std::string& text);
std::string serialize_document(const StructureDocument& doc);

/// Conversions between documents and table structures. Document -> structure
/// validates shapes; user-supplied inverse-like data never exists in the
/// schema, so derived tables are always recomputed.
DynGroup doc_to_group(const StructureDocument& doc);
PostGroup doc_to_post(const StructureDocument& doc);
SkewBrace doc_to_brace(const StructureDocument& doc);
BraidedGroup doc_to_braided(const StructureDocument& doc);
DynAction doc_to_action(const StructureDocument& doc);
RelRBO doc_to_rbo(const StructureDocument& doc);

StructureDocument group_to_doc(const DynGroup& g,
                               std::vector<std::string> lambda_labels = {},
                               std::vector<std::string> elem_labels = {});
StructureDocument post_to_doc(const PostGroup& p,
                              std::vector<std::string> lambda_labels = {},
                              std::vector<std::string> elem_labels = {});
StructureDocument brace_to_doc(const SkewBrace& s,
                               std::vector<std::string> lambda_labels = {},
                               std::vector<std::string> elem_labels = {});
StructureDocument braided_to_doc(const BraidedGroup& b,
                                 std::vector<std::string> lambda_labels = {},
                                 std::vector<std::string> elem_labels = {});
StructureDocument rbo_to_doc(const RelRBO& r,
                             std::vector<std::string> lambda_labels = {},
                             std::vector<std::string> elem_labels = {});

StructureDocument structure_to_doc(const Structure& s);

/// Default label families "l0", "l1", ... and "e0", "e1", ...
std::vector<std::string> default_lambda_labels(int l);
std::vector<std::string> default_elem_labels(int n);

}  // namespace dyb

#endif

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dyb/document.hpp"
#include "dyb/groupoid.hpp"
#include "dyb/rational.hpp"

using namespace dyb;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file: " + out_path);
  out << text;
}

// Exit-code contract: 0 all checks pass, 1 verdict failure, 2 input errors.
int verdict_exit(const Verdict& v) {
  std::cout << to_json_line(v) << "\n";
  return v.passed ? 0 : 1;
}

Verdict verify_doc(const StructureDocument& doc) {
  if (doc.kind == "dynamical_group") return verify_dyn_group(doc_to_group(doc));
  if (doc.kind == "post_group") return verify_post_group(doc_to_post(doc));
  if (doc.kind == "skew_brace") return verify_skew_brace(doc_to_brace(doc));
  if (doc.kind == "braided_group") return verify_braided(doc_to_braided(doc));
  if (doc.kind == "action") return verify_action(doc_to_action(doc));
  if (doc.kind == "rbo") return verify_rbo(doc_to_rbo(doc));
  throw ParseError("verify: no verifier for kind '" + doc.kind + "'");
}

PostGroup doc_to_post_hub(const StructureDocument& doc) {
  if (doc.kind == "post_group") return checked_post_group(doc_to_post(doc));
  if (doc.kind == "braided_group") return braided_to_post(doc_to_braided(doc));
  if (doc.kind == "skew_brace") return skewbrace_to_post(doc_to_brace(doc));
  if (doc.kind == "rbo") return rbo_to_post(doc_to_rbo(doc));
  throw ParseError("convert: kind '" + doc.kind + "' has no conversion path");
}

std::vector<std::string> pair_labels(const std::vector<std::string>& h_labels,
                                     const std::vector<std::string>& g_labels) {
  std::vector<std::string> out;
  for (const auto& x : h_labels)
    for (const auto& a : g_labels) out.push_back("(" + x + "," + a + ")");
  return out;
}

DynGroup doc_to_any_group(const StructureDocument& doc) {
  if (doc.kind == "dynamical_group" || doc.kind == "braided_group")
    return checked_group(doc_to_group(doc));
  if (doc.kind == "post_group") return sub_adjacent(doc_to_post(doc));
  if (doc.kind == "skew_brace") {
    SkewBrace s = checked_skew_brace(doc_to_brace(doc));
    return checked_group(s.base, s.circ, s.unit);
  }
  if (doc.kind == "rbo") return descendant(doc_to_rbo(doc));
  throw ParseError("no group view for kind '" + doc.kind + "'");
}

int cmd_verify(const std::string& path, const std::string& kind) {
  StructureDocument doc = parse_document(read_file(path));
  if (!kind.empty() && kind != doc.kind)
    throw ParseError("verify: document kind '" + doc.kind +
                     "' does not match --kind " + kind);
  return verdict_exit(verify_doc(doc));
}

int cmd_convert(const std::string& path, const std::string& to,
                const std::string& out_path) {
  StructureDocument doc = parse_document(read_file(path));
  Verdict v = verify_doc(doc);
  if (!v.passed) return verdict_exit(v);
  PostGroup hub = doc_to_post_hub(doc);
  StructureDocument out;
  if (to == "post_group")
    out = post_to_doc(hub, doc.lambda_labels, doc.elem_labels);
  else if (to == "braided_group")
    out = braided_to_doc(post_to_braided(hub), doc.lambda_labels, doc.elem_labels);
  else if (to == "skew_brace")
    out = brace_to_doc(post_to_skewbrace(hub), doc.lambda_labels, doc.elem_labels);
  else if (to == "rbo")
    out = rbo_to_doc(identity_rbo(hub), doc.lambda_labels, doc.elem_labels);
  else
    throw ParseError("convert: unsupported target kind '" + to + "'");
  write_output(serialize_document(out), out_path);
  return 0;
}

int cmd_check_ybe(const std::string& path) {
  StructureDocument doc = parse_document(read_file(path));
  Verdict v = verify_doc(doc);
  if (!v.passed) return verdict_exit(v);
  Braiding r = [&doc]() {
    if (doc.kind == "braided_group")
      return braided_to_solution(doc_to_braided(doc));
    if (doc.kind == "post_group")
      return braided_to_solution(post_to_braided(doc_to_post(doc)));
    if (doc.kind == "skew_brace") return skewbrace_solution(doc_to_brace(doc));
    if (doc.kind == "rbo") return rbo_solution(doc_to_rbo(doc));
    throw ParseError("check-ybe: kind '" + doc.kind + "' induces no braiding");
  }();
  long long pairs = static_cast<long long>(r.l()) * r.n() * r.n();
  long long triples = pairs * r.n();
  Verdict wz = check_weight_zero(r);
  std::cout << "{\"check\":\"weight_zero\",\"instances\":" << pairs
            << ",\"passed\":" << (wz.passed ? "true" : "false") << "}\n";
  Verdict nd = check_nondegenerate(r);
  std::cout << "{\"check\":\"nondegenerate\",\"instances\":" << 2 * r.l() * r.n()
            << ",\"passed\":" << (nd.passed ? "true" : "false") << "}\n";
  Verdict dy = check_dybe(r);
  std::cout << "{\"check\":\"dybe\",\"instances\":" << triples
            << ",\"passed\":" << (dy.passed ? "true" : "false") << "}\n";
  return (wz.passed && nd.passed && dy.passed) ? 0 : 1;
}

int cmd_double(const std::string& path, const std::string& out_path) {
  StructureDocument doc = parse_document(read_file(path));
  if (doc.kind != "braided_group")
    throw ParseError("double: expected a braided_group document");
  BraidedGroup b = doc_to_braided(doc);
  Verdict v = verify_braided(b);
  if (!v.passed) return verdict_exit(v);
  DynGroup d = double_group(braided_as_pair(b));
  StructureDocument out = group_to_doc(d, doc.lambda_labels,
                                       pair_labels(doc.elem_labels, doc.elem_labels));
  write_output(serialize_document(out), out_path);
  return 0;
}

int cmd_semidirect(const std::string& path, const std::string& out_path) {
  StructureDocument doc = parse_document(read_file(path));
  if (doc.kind != "action" && doc.kind != "rbo")
    throw ParseError("semidirect: expected an action or rbo document");
  DynAction act = doc_to_action(doc);
  Verdict v = verify_action(act);
  if (!v.passed) return verdict_exit(v);
  DynGroup sd = semidirect(act);
  StructureDocument out = group_to_doc(sd, doc.lambda_labels,
                                       pair_labels(doc.elem_labels, doc.elem_labels));
  write_output(serialize_document(out), out_path);
  return 0;
}

int cmd_descendant(const std::string& path, const std::string& out_path) {
  StructureDocument doc = parse_document(read_file(path));
  if (doc.kind != "rbo") throw ParseError("descendant: expected an rbo document");
  RelRBO r = doc_to_rbo(doc);
  Verdict v = verify_rbo(r);
  if (!v.passed) return verdict_exit(v);
  StructureDocument out =
      group_to_doc(descendant(r), doc.lambda_labels, doc.elem_labels);
  write_output(serialize_document(out), out_path);
  return 0;
}

int cmd_factorize(const std::string& path, const std::string& out_path) {
  StructureDocument doc = parse_document(read_file(path));
  if (doc.kind != "rbo") throw ParseError("factorize: expected an rbo document");
  RelRBO r = doc_to_rbo(doc);
  Verdict v = verify_rbo(r);
  if (!v.passed) return verdict_exit(v);
  StructureDocument out =
      group_to_doc(factorization_group(r), doc.lambda_labels,
                   pair_labels(doc.elem_labels, doc.elem_labels));
  write_output(serialize_document(out), out_path);
  return 0;
}

int cmd_quiver(const std::string& path, bool dot, bool units,
               const std::string& out_path) {
  if (!dot) throw ParseError("quiver: --dot is the only supported output format");
  StructureDocument doc = parse_document(read_file(path));
  Verdict v = verify_doc(doc);
  if (!v.passed) return verdict_exit(v);
  DynGroup g = doc_to_any_group(doc);
  Groupoid q = functor_q(g);
  DotNames names;
  names.object_names = doc.lambda_labels;
  for (int m = 0; m < q.num_morphisms(); ++m) {
    int lam = q.key[static_cast<size_t>(m)][0];
    int x = q.key[static_cast<size_t>(m)][1];
    names.morphism_names.push_back(
        "(" + doc.lambda_labels[static_cast<size_t>(lam)] + "," +
        doc.elem_labels[static_cast<size_t>(x)] + ")");
  }
  write_output(export_dot(q, names, units), out_path);
  return 0;
}

int cmd_enumerate(const std::string& kind, int n, int l, bool canonical,
                  bool stream, const std::string& contains,
                  long long max_nodes, double max_seconds) {
  SearchSpec spec;
  spec.kind = kind_from_name(kind);
  spec.elem_size = n;
  spec.lambda_size = l;
  if (max_nodes > 0) spec.limits.max_nodes = max_nodes;
  if (max_seconds > 0) spec.limits.max_seconds = max_seconds;

  if (!contains.empty()) {
    StructureDocument doc = parse_document(read_file(contains));
    if (doc.n() != n || doc.l() != l)
      throw ParseError("enumerate: --contains fixture sizes do not match --n/--l");
    std::vector<int> key;
    if (spec.kind == StructureKind::dynamical_group)
      key = structure_key(Structure(doc_to_group(doc)));
    else if (spec.kind == StructureKind::post_group)
      key = structure_key(Structure(doc_to_post(doc)));
    else if (spec.kind == StructureKind::skew_brace)
      key = structure_key(Structure(doc_to_brace(doc)));
    else
      key = structure_key(Structure(doc_to_braided(doc)));
    bool found = find_containing(spec, key);
    std::cout << "{\"kind\":\"" << kind << "\",\"n\":" << n << ",\"l\":" << l
              << ",\"found\":" << (found ? "true" : "false") << "}\n";
    return found ? 0 : 1;
  }
  if (stream) {
    for (const Structure& s : enumerate_structures(spec))
      std::cout << serialize_document(structure_to_doc(s));
    return 0;
  }
  if (canonical) {
    long long c = canonical_count(spec);
    std::cout << "{\"kind\":\"" << kind << "\",\"n\":" << n << ",\"l\":" << l
              << ",\"canonical_count\":" << c << "}\n";
    return 0;
  }
  // line-delimited status records on stderr while counting
  long long c = 0;
  enumerate_stream(spec, [&](const Structure&) {
    if (++c % 1000 == 0)
      std::cerr << "{\"status\":\"progress\",\"found\":" << c << "}\n";
  });
  std::cout << "{\"kind\":\"" << kind << "\",\"n\":" << n << ",\"l\":" << l
            << ",\"count\":" << c << "}\n";
  return 0;
}

int cmd_sample(const std::string& exemplar, int count, std::uint64_t seed) {
  RationalSampler s{exemplar, count, seed};
  Verdict v = run_rational_suite(s);
  std::cout << "{\"exemplar\":\"" << exemplar << "\",\"count\":" << count
            << ",\"seed\":" << seed
            << ",\"passed\":" << (v.passed ? "true" : "false") << "}\n";
  if (!v.passed) std::cout << to_json_line(v) << "\n";
  return v.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite dynamical Yang-Baxter structures: verify, convert, enumerate"};
  app.require_subcommand(1);

  std::string file, kind, to, out_path, contains, exemplar;
  bool dot = false, units = false, canonical = false, stream = false;
  int n = 1, l = 1, count = 100;
  long long max_nodes = 0;
  double max_seconds = 0;
  std::uint64_t seed = 0;

  auto* verify = app.add_subcommand("verify", "run the matching verifier on a document");
  verify->add_option("file", file)->required();
  verify->add_option("--kind", kind, "assert the document kind");

  auto* convert = app.add_subcommand("convert", "convert between equivalent structures");
  convert->add_option("file", file)->required();
  convert->add_option("--to", to, "target kind")->required();
  convert->add_option("--out", out_path);

  auto* ybe = app.add_subcommand("check-ybe", "run weight-zero, non-degeneracy and the braid relation");
  ybe->add_option("file", file)->required();

  auto* dbl = app.add_subcommand("double", "double group of a braided document");
  dbl->add_option("file", file)->required();
  dbl->add_option("--out", out_path);

  auto* semi = app.add_subcommand("semidirect", "semi-direct product of an action document");
  semi->add_option("file", file)->required();
  semi->add_option("--out", out_path);

  auto* desc = app.add_subcommand("descendant", "descendant group of an rbo document");
  desc->add_option("file", file)->required();
  desc->add_option("--out", out_path);

  auto* fact = app.add_subcommand("factorize", "factorization group of an rbo document");
  fact->add_option("file", file)->required();
  fact->add_option("--out", out_path);

  auto* quiver = app.add_subcommand("quiver", "export the induced groupoid");
  quiver->add_option("file", file)->required();
  quiver->add_flag("--dot", dot, "emit Graphviz DOT");
  quiver->add_flag("--units", units, "include unit loops");
  quiver->add_option("--out", out_path);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate small structures");
  enumerate->add_option("--kind", kind)->required();
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--l", l)->required();
  enumerate->add_flag("--canonical", canonical, "count up to relabeling");
  enumerate->add_flag("--stream", stream, "emit one document per structure");
  enumerate->add_option("--contains", contains, "look for the given fixture");
  enumerate->add_option("--max-nodes", max_nodes);
  enumerate->add_option("--max-seconds", max_seconds);

  auto* sample = app.add_subcommand("sample", "run an exact-rational exemplar suite");
  sample->add_option("--exemplar", exemplar)->required();
  sample->add_option("--count", count);
  sample->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(file, kind);
    if (convert->parsed()) return cmd_convert(file, to, out_path);
    if (ybe->parsed()) return cmd_check_ybe(file);
    if (dbl->parsed()) return cmd_double(file, out_path);
    if (semi->parsed()) return cmd_semidirect(file, out_path);
    if (desc->parsed()) return cmd_descendant(file, out_path);
    if (fact->parsed()) return cmd_factorize(file, out_path);
    if (quiver->parsed()) return cmd_quiver(file, dot, units, out_path);
    if (enumerate->parsed())
      return cmd_enumerate(kind, n, l, canonical, stream, contains, max_nodes,
                           max_seconds);
    if (sample->parsed()) return cmd_sample(exemplar, count, seed);
  } catch (const BudgetExhausted& e) {
    std::cerr << "{\"error\":\"budget_exhausted\",\"nodes\":" << e.nodes
              << ",\"found\":" << e.found << "}\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
    return 2;
  }
  return 2;
}

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "golden.hpp"
#include "troplin/extension.hpp"
#include "troplin/json_io.hpp"
#include "troplin/lift.hpp"

namespace {

using troplin::BoolValue;
using troplin::DomainError;
using troplin::ExteriorVector;
using troplin::FieldSpace;
using troplin::GroundSet;
using troplin::Mask;
using troplin::Matroid;
using troplin::PluckerVector;
using troplin::Rational;
using troplin::TropMatrix;
using troplin::TropValue;
namespace io = troplin::io;
using json = io::json;

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;
  int attempts = 5;
  int samples = 0;
  bool rescale = false;
  bool verbose = false;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::ParseError("cannot open input file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw io::ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return doc;
}

// Dispatch helper: parses the document and calls fn on the typed vector,
// so each command is written once, generically over the semifield.
template <typename Fn>
auto with_vector(const json& doc, Fn&& fn) {
  return std::visit(std::forward<Fn>(fn), io::parse_vector(doc));
}

// Second documents must match the semifield of the first; mixed inputs are
// refused rather than silently pushed forward.
template <troplin::Semifield S>
TropMatrix<S> matching_matrix(const json& doc) {
  io::AnyMatrix m = io::parse_matrix(doc);
  if (auto* a = std::get_if<TropMatrix<S>>(&m)) return std::move(*a);
  throw DomainError("mixed semifields: use the pushforward command to convert explicitly");
}

template <troplin::Semifield S>
ExteriorVector<S> matching_vector(const json& doc) {
  io::AnyVector v = io::parse_vector(doc);
  if (auto* x = std::get_if<ExteriorVector<S>>(&v)) return std::move(*x);
  throw DomainError("mixed semifields: use the pushforward command to convert explicitly");
}

struct CommandOutput {
  json result;
  std::string text;
};

template <troplin::Semifield S>
std::string vector_summary(const ExteriorVector<S>& v) {
  std::ostringstream os;
  os << "grade-" << v.grade() << " vector on {";
  for (int i = 0; i < v.ground().size(); ++i) os << (i ? "," : "") << v.ground().label(i);
  os << "}:";
  for (const auto& [i, c] : v.coords()) os << " [" << v.ground().subset_key(i) << "]=" << c.str();
  if (v.is_zero()) os << " zero";
  return os.str();
}

std::string matroid_summary(const Matroid& m) {
  std::ostringstream os;
  os << "rank-" << m.rank() << " matroid with " << m.bases().size() << " bases:";
  for (Mask b : m.bases()) os << " {" << m.ground().subset_key(b) << "}";
  return os.str();
}

// Collects the least common denominator of all exponents so lift inputs
// can be rescaled exactly; the factor is reported in the result.
long long exponent_denominator_lcm(const TropMatrix<TropValue>& a) {
  boost::multiprecision::cpp_int l = 1;
  for (int r = 0; r < a.rows().size(); ++r)
    for (int c = 0; c < a.cols().size(); ++c)
      if (!a.at(r, c).is_zero())
        l = boost::multiprecision::lcm(
            l, boost::multiprecision::denominator(a.at(r, c).finite_value()));
  return static_cast<long long>(l);
}

TropMatrix<TropValue> scale_exponents(const TropMatrix<TropValue>& a, long long k) {
  TropMatrix<TropValue> out(a.rows(), a.cols());
  for (int r = 0; r < a.rows().size(); ++r)
    for (int c = 0; c < a.cols().size(); ++c)
      if (!a.at(r, c).is_zero()) out.set(r, c, TropValue(a.at(r, c).finite_value() * k));
  return out;
}

ExteriorVector<TropValue> scale_exponents(const ExteriorVector<TropValue>& v, long long k) {
  ExteriorVector<TropValue> out(v.ground(), v.grade());
  for (const auto& [i, c] : v.coords()) out.set(i, TropValue(c.finite_value() * k));
  return out;
}

int run_golden(const std::string& action, const std::string& name, bool all, const Options& opt) {
  if (action == "list") {
    json names = json::array();
    std::string text = "golden examples:";
    for (const auto& n : troplin::golden::example_names()) {
      names.push_back(n);
      text += "\n  " + n;
    }
    if (opt.format == "text")
      std::cout << text << "\n";
    else
      std::cout << json{{"command", "golden"}, {"ok", true}, {"result", {{"examples", names}}}}.dump(2)
                << "\n";
    return 0;
  }
  if (action != "run") throw io::ParseError("unknown golden subcommand \"" + action + "\"");
  std::vector<std::string> names;
  if (all)
    names = troplin::golden::example_names();
  else if (!name.empty())
    names = {name};
  else
    throw io::ParseError("golden run needs an example name or --all");

  bool all_pass = true;
  json results = json::array();
  std::string text;
  for (const auto& name : names) {
    troplin::golden::ExampleResult r = troplin::golden::run_example(name);
    all_pass = all_pass && r.pass;
    json checks = json::array();
    for (const auto& d : r.details) checks.push_back(d);
    results.push_back(json{{"name", r.name}, {"pass", r.pass}, {"checks", std::move(checks)}});
    text += (r.pass ? "PASS " : "FAIL ") + name + "\n";
    for (const auto& d : r.details) text += "  " + d + "\n";
  }
  if (opt.format == "text")
    std::cout << text;
  else
    std::cout << json{{"command", "golden"}, {"ok", all_pass}, {"result", {{"examples", results}}}}.dump(2)
              << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with tropical linear spaces"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "random seed for sampling and lifts");
  app.add_option("--attempts", opt.attempts, "maximum number of generic lifts to try");
  app.add_option("--samples", opt.samples, "number of sampled module points for diagnostics");
  app.add_flag("--rescale", opt.rescale, "rescale non-integer exponents for lift commands");
  app.add_flag("-v,--verbose", opt.verbose, "print timing to stderr");

  std::string space_file, point_file, input_file, sub_file, super_file, matrix_file;
  std::string matroid_file, graph_file, a_file, b_file, form_file, span_file;
  std::string coords_arg, flat_arg, label_arg;

  auto* validate = app.add_subcommand("validate", "check the tropical Plücker relations");
  validate->add_option("--input", input_file)->required();
  auto* member = app.add_subcommand("member", "test membership of a point in a space");
  member->add_option("--space", space_file)->required();
  member->add_option("--point", point_file)->required();
  auto* cocirc = app.add_subcommand("cocircuits", "the valuated cocircuits of a space");
  cocirc->add_option("--space", space_file)->required();
  auto* subspace = app.add_subcommand("subspace", "test containment of two spaces");
  subspace->add_option("--sub", sub_file)->required();
  subspace->add_option("--super", super_file)->required();
  auto* dual_cmd = app.add_subcommand("dual", "tropical orthogonal dual");
  dual_cmd->add_option("--space", space_file)->required();
  auto* project = app.add_subcommand("project", "coordinate projection onto a subset");
  project->add_option("--space", space_file)->required();
  project->add_option("--coords", coords_arg)->required();
  auto* intersect = app.add_subcommand("intersect", "intersection with a coordinate subspace");
  intersect->add_option("--space", space_file)->required();
  intersect->add_option("--coords", coords_arg)->required();
  auto* matroid_cmd = app.add_subcommand("matroid", "underlying matroid of a space");
  matroid_cmd->add_option("--space", space_file)->required();
  auto* pushf = app.add_subcommand("pushforward", "push a max-plus document to the Boolean semifield");
  pushf->add_option("--input", input_file)->required();
  auto* induce = app.add_subcommand("induce", "induced matroid through a bipartite graph");
  induce->add_option("--matroid", matroid_file)->required();
  induce->add_option("--graph", graph_file)->required();
  auto* union_cmd = app.add_subcommand("union", "matroid union");
  union_cmd->add_option("--a", a_file)->required();
  union_cmd->add_option("--b", b_file)->required();
  auto* prin = app.add_subcommand("principal-ext", "principal extension of a matroid");
  prin->add_option("--matroid", matroid_file)->required();
  prin->add_option("--flat", flat_arg, "comma-joined labels spanning the flat (may be empty)");
  prin->add_option("--label", label_arg)->required();
  auto* cyclic = app.add_subcommand("cyclic-flats", "cyclic flats and the Brylawski bound");
  cyclic->add_option("--matroid", matroid_file)->required();
  auto* transv = app.add_subcommand("transversal", "search for a transversal presentation");
  transv->add_option("--matroid", matroid_file)->required();
  auto* extend = app.add_subcommand("extend", "linear extension by a new coordinate");
  extend->add_option("--space", space_file)->required();
  extend->add_option("--form", form_file)->required();
  extend->add_option("--label", label_arg)->required();
  auto* graph_cmd = app.add_subcommand("graph", "tropical graph of a matrix on a space");
  graph_cmd->add_option("--space", space_file)->required();
  graph_cmd->add_option("--matrix", matrix_file)->required();
  auto* image = app.add_subcommand("image", "tropical image of a space under a matrix");
  image->add_option("--space", space_file)->required();
  image->add_option("--matrix", matrix_file)->required();
  auto* ssum = app.add_subcommand("stable-sum", "generalized stable sum");
  ssum->add_option("--a", a_file)->required();
  ssum->add_option("--b", b_file)->required();
  auto* sint = app.add_subcommand("stable-intersect", "generalized stable intersection");
  sint->add_option("--a", a_file)->required();
  sint->add_option("--b", b_file)->required();
  auto* lift_cmd = app.add_subcommand("lift", "generic Laurent-polynomial lift of a matrix");
  lift_cmd->add_option("--matrix", matrix_file)->required();
  auto* realize = app.add_subcommand("realize-check", "verify realizability of a tropical image");
  realize->add_option("--space", space_file)->required();
  realize->add_option("--matrix", matrix_file)->required();
  realize->add_option("--span", span_file)->required();
  auto* golden_cmd = app.add_subcommand("golden", "run the built-in example corpus");
  std::string golden_action, golden_name;
  bool golden_all = false;
  golden_cmd->add_option("action", golden_action, "list or run")->required();
  golden_cmd->add_option("name", golden_name, "example name for run");
  golden_cmd->add_flag("--all", golden_all, "run every example");

  // global flags may appear after the subcommand
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  const auto started = std::chrono::steady_clock::now();
  std::string command;
  int exit_code = 0;

  try {
    CommandOutput out;

    if (golden_cmd->parsed()) return run_golden(golden_action, golden_name, golden_all, opt);

    if (validate->parsed()) {
      command = "validate";
      out = with_vector(load_json(input_file), [](const auto& v) -> CommandOutput {
        using S = typename std::decay_t<decltype(v)>::value_type;
        auto outcome = PluckerVector<S>::validate(v);
        if (outcome.ok())
          return {json{{"valid", true}, {"rank", v.grade()}},
                  "valid Plücker vector of rank " + std::to_string(v.grade())};
        const auto& viol = *outcome.violation;
        json report{{"valid", false},
                    {"violation",
                     {{"J", v.ground().subset_key(viol.j_set)},
                      {"K", v.ground().subset_key(viol.k_set)},
                      {"j", viol.j < 0 ? std::string() : v.ground().label(viol.j)},
                      {"message", viol.message}}}};
        return {std::move(report), "invalid: " + viol.message};
      });
    } else if (member->parsed()) {
      command = "member";
      out = with_vector(load_json(space_file), [&](const auto& v) -> CommandOutput {
        using S = typename std::decay_t<decltype(v)>::value_type;
        auto w = PluckerVector<S>::checked(v);
        auto point = matching_vector<S>(load_json(point_file));
        const bool inside = contains_point(w, point);
        return {json{{"member", inside}}, inside ? "member" : "not a member"};
      });
    } else if (cocirc->parsed()) {
      command = "cocircuits";
      out = with_vector(load_json(space_file), [&](const auto& v) -> CommandOutput {
        using S = typename std::decay_t<decltype(v)>::value_type;
        auto w = PluckerVector<S>::checked(v);
        json list = json::array();
        std::string text;
        for (const auto& c : cocircuits(w)) {
          list.push_back(json{{"K", v.ground().subset_key(c.k_set)},
                              {"point", io::emit_vector(c.point)}});
          text += "K={" + v.ground().subset_key(c.k_set) + "}: " + vector_summary(c.point) + "\n";
        }
        return {json{{"cocircuits", std::move(list)}}, std::move(text)};
      });
    } else if (subspace->parsed()) {
      command = "subspace";
      out = with_vector(load_json(sub_file), [&](const auto& v) -> CommandOutput {
        using S = typename std::decay_t<decltype(v)>::value_type;
        auto w = PluckerVector<S>::checked(v);
        auto z = PluckerVector<S>::checked(matching_vector<S>(load_json(super_file)));
        const bool contained = is_subspace(w, z);
        return {json{{"subspace", contained}}, contained ? "contained" : "not contained"};
      });
    } else if (dual_cmd->parsed()) {
      command = "dual";
      out = with_vector(load_json(space_file), [](const auto& v) -> CommandOutput {
        using S = typename std::decay_t<decltype(v)>::value_type;
        auto d = dual(PluckerVector<S>::checked(v));
        return {io::emit_vector(d.vec()), vector_summary(d.vec())};
      });
    } else if (project->parsed() || intersect->parsed()) {
      const bool projecting = project->parsed();
      command = projecting ? "project" : "intersect";
      out = with_vector(load_json(space_file), [&](const auto& v) -> CommandOutput {
        using S = typename std::decay_t<decltype(v)>::value_type;
        auto w = PluckerVector<S>::checked(v);
        const Mask f = v.ground().parse_subset_key(coords_arg);
        auto z = projecting ? minor_project(w, f) : minor_intersect(w, f);
        return {io::emit_vector(z.vec()), vector_summary(z.vec())};
      });
    } else if (matroid_cmd->parsed()) {
      command = "matroid";
      out = with_vector(load_json(space_file), [](const auto& v) -> CommandOutput {
        using S = typename std::decay_t<decltype(v)>::value_type;
        Matroid m = underlying_matroid(PluckerVector<S>::checked(v));
        return {io::emit_matroid(m), matroid_summary(m)};
      });
    } else if (pushf->parsed()) {
      command = "pushforward";
      const json doc = load_json(input_file);
      if (doc.contains("grade")) {
        auto v = matching_vector<TropValue>(doc);
        auto b = push_forward(v);
        out = {io::emit_vector(b), vector_summary(b)};
      } else {
        auto a = matching_matrix<TropValue>(doc);
        auto b = push_forward(a);
        out = {io::emit_matrix(b), "pushed matrix to the Boolean semifield"};
      }
    } else if (induce->parsed()) {
      command = "induce";
      Matroid m = io::parse_matroid(load_json(matroid_file));
      auto g = io::parse_graph(load_json(graph_file));
      Matroid induced = induced_matroid(m, g);
      out = {io::emit_matroid(induced), matroid_summary(induced)};
    } else if (union_cmd->parsed()) {
      command = "union";
      Matroid a = io::parse_matroid(load_json(a_file));
      Matroid b = io::parse_matroid(load_json(b_file));
      Matroid u = matroid_union(a, b);
      out = {io::emit_matroid(u), matroid_summary(u)};
    } else if (prin->parsed()) {
      command = "principal-ext";
      Matroid m = io::parse_matroid(load_json(matroid_file));
      const Mask f = m.ground().parse_subset_key(flat_arg);
      Matroid ext = principal_extension(m, f, label_arg);
      out = {io::emit_matroid(ext), matroid_summary(ext)};
    } else if (cyclic->parsed()) {
      command = "cyclic-flats";
      Matroid m = io::parse_matroid(load_json(matroid_file));
      json flats = json::array();
      std::string text;
      for (const auto& [flat, rank] : cyclic_flats(m)) {
        json labels = json::array();
        for (const auto& l : m.ground().labels_of(flat)) labels.push_back(l);
        flats.push_back(json{{"flat", std::move(labels)}, {"rank", rank}});
        text += "rank " + std::to_string(rank) + ": {" + m.ground().subset_key(flat) + "}\n";
      }
      const bool bound = brylawski_bound_check(m);
      text += bound ? "Brylawski bound holds" : "Brylawski bound fails";
      out = {json{{"cyclic_flats", std::move(flats)}, {"brylawski_bound", bound}}, std::move(text)};
    } else if (transv->parsed()) {
      command = "transversal";
      Matroid m = io::parse_matroid(load_json(matroid_file));
      auto presentation = is_transversal(m);
      if (presentation)
        out = {json{{"transversal", true}, {"presentation", io::emit_graph(*presentation)}},
               "transversal"};
      else
        out = {json{{"transversal", false}}, "not transversal"};
    } else if (extend->parsed()) {
      command = "extend";
      out = with_vector(load_json(space_file), [&](const auto& v) -> CommandOutput {
        using S = typename std::decay_t<decltype(v)>::value_type;
        auto w = PluckerVector<S>::checked(v);
        auto phi = matching_vector<S>(load_json(form_file));
        auto z = linear_extension(w, phi, label_arg);
        return {io::emit_vector(z.vec()), vector_summary(z.vec())};
      });
    } else if (graph_cmd->parsed() || image->parsed()) {
      const bool full_graph = graph_cmd->parsed();
      command = full_graph ? "graph" : "image";
      out = with_vector(load_json(space_file), [&](const auto& v) -> CommandOutput {
        using S = typename std::decay_t<decltype(v)>::value_type;
        auto w = PluckerVector<S>::checked(v);
        auto a = matching_matrix<S>(load_json(matrix_file));
        if (full_graph) {
          auto g = graph_extension(w, a);
          return {io::emit_vector(g.vec()), vector_summary(g.vec())};
        }
        auto z = tropical_image(w, a);
        json result = io::emit_vector(z.vec());
        std::string text = vector_summary(z.vec());
        if (opt.samples > 0) {
          int inside = 0;
          auto points = set_image_points(w, a, opt.samples, opt.seed);
          for (const auto& p : points)
            if (contains_point(z, p)) ++inside;
          result = json{{"image", std::move(result)},
                        {"sampled_points", points.size()},
                        {"contained", inside}};
          text += "\nsampled " + std::to_string(points.size()) + " image points, " +
                  std::to_string(inside) + " contained";
        }
        return {std::move(result), std::move(text)};
      });
    } else if (ssum->parsed() || sint->parsed()) {
      const bool summing = ssum->parsed();
      command = summing ? "stable-sum" : "stable-intersect";
      out = with_vector(load_json(a_file), [&](const auto& v) -> CommandOutput {
        using S = typename std::decay_t<decltype(v)>::value_type;
        auto w = PluckerVector<S>::checked(v);
        auto z = PluckerVector<S>::checked(matching_vector<S>(load_json(b_file)));
        auto result = summing ? stable_sum(w, z) : stable_intersection(w, z);
        return {io::emit_vector(result.vec()), vector_summary(result.vec())};
      });
    } else if (lift_cmd->parsed()) {
      command = "lift";
      auto a = matching_matrix<TropValue>(load_json(matrix_file));
      long long factor = 1;
      if (opt.rescale) {
        factor = exponent_denominator_lcm(a);
        if (factor != 1) a = scale_exponents(a, factor);
      }
      const int rank_hint = std::min(a.rows().size(), a.cols().size());
      auto lifted = generic_lift(a, rank_hint, opt.seed);
      json result{{"lift", io::emit_field_matrix(lifted)}};
      if (factor != 1) result["rescaled_by"] = factor;
      out = {std::move(result), "lifted with seed " + std::to_string(opt.seed)};
    } else if (realize->parsed()) {
      command = "realize-check";
      auto w_vec = matching_vector<TropValue>(load_json(space_file));
      auto a = matching_matrix<TropValue>(load_json(matrix_file));
      FieldSpace lambda = io::parse_field_space(load_json(span_file));
      long long factor = 1;
      if (opt.rescale) {
        factor = exponent_denominator_lcm(a);
        for (const auto& [i, c] : w_vec.coords()) {
          (void)i;
          factor = std::lcm(factor, static_cast<long long>(
                                        boost::multiprecision::denominator(c.finite_value())));
        }
        if (factor != 1) {
          a = scale_exponents(a, factor);
          w_vec = scale_exponents(w_vec, factor);
          troplin::PolyMatrix scaled;
          for (const auto& row : lambda.span()) {
            std::vector<troplin::LaurentPoly> r;
            for (const auto& p : row) r.push_back(p.exponent_scaled(factor));
            scaled.push_back(std::move(r));
          }
          lambda = FieldSpace(lambda.ground(), std::move(scaled));
        }
      }
      auto w = PluckerVector<TropValue>::checked(w_vec);
      auto outcome = verify_realizable(w, a, lambda, opt.attempts, opt.seed);
      json result{{"realized", outcome.success}, {"attempts_used", outcome.attempts_used}};
      if (factor != 1) result["rescaled_by"] = factor;
      std::string text;
      if (outcome.success) {
        result["witness"] = io::emit_field_matrix(*outcome.witness);
        result["image"] = io::emit_vector(outcome.target.vec());
        text = "realized after " + std::to_string(outcome.attempts_used) + " attempt(s)";
      } else {
        json mism = json::array();
        for (const auto& k : outcome.mismatched_coordinates) mism.push_back(k);
        result["mismatched_coordinates"] = std::move(mism);
        text = "not realized within " + std::to_string(outcome.attempts_used) + " attempt(s)";
      }
      out = {std::move(result), std::move(text)};
    }

    if (opt.verbose) {
      const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
      std::cerr << command << " took " << elapsed.count() << " s\n";
    }
    if (opt.format == "text") {
      std::cout << out.text << "\n";
    } else {
      std::cout << json{{"command", command}, {"ok", true}, {"result", out.result}}.dump(2) << "\n";
    }
  } catch (const io::ParseError& e) {
    std::cout << json{{"command", command}, {"ok", false},
                      {"error", {{"kind", "parse"}, {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    exit_code = 2;
  } catch (const DomainError& e) {
    std::cout << json{{"command", command}, {"ok", false},
                      {"error", {{"kind", "domain"}, {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    exit_code = 1;
  }
  return exit_code;
}

// Command-line front end. Exit codes: 0 success, 1 a check failed (or the
// form is obstructed, for `rohlin`), 2 invalid input.

#include "trisect/forms.hpp"
#include "trisect/io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace trisect;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

struct Options {
  bool json_out = false;
  std::uint64_t seed = 1;
  Index runs = 100;
  Index k = 0;
  std::string out;
  std::string path;
  std::string spec;
};

std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("TRISECT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, std::string("TRISECT_SEED is not an unsigned integer: ") + env);
    }
  }
  return flag;
}

void print_matrix(const IntMatrix& m, const std::string& indent = "  ") {
  for (Index i = 0; i < m.rows(); ++i) {
    std::cout << indent;
    for (Index j = 0; j < m.cols(); ++j) std::cout << (j ? " " : "") << m(i, j);
    std::cout << "\n";
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_form(const Options& o) {
  DiagramFile f = load_diagram_file(o.path);
  IntMatrix q = intersection_form(f.diagram).matrix;
  std::optional<bool> matches;
  if (f.expected_form) matches = parse_form_spec(*f.expected_form).matrix == q;

  if (o.json_out) {
    json j = form_to_json(q);
    if (!f.name.empty()) j["name"] = f.name;
    if (f.expected_form) {
      j["expected_form"] = *f.expected_form;
      j["matches_expected"] = *matches;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (!f.name.empty()) std::cout << f.name << "\n";
    std::cout << "intersection form, rank " << q.rows() << "\n";
    print_matrix(q);
    json j = form_to_json(q);
    std::cout << "signature " << (j["signature"].is_null() ? std::string("undefined") : j["signature"].dump()) << "\n"
              << "even: " << yes_no(is_even(q)) << "\n"
              << "unimodular: " << yes_no(is_unimodular(q)) << "\n";
    if (matches) std::cout << (*matches ? "matches" : "does not match") << " expected form " << *f.expected_form << "\n";
  }
  return matches.value_or(true) ? kOk : kFailed;
}

int cmd_construct(const Options& o) {
  LabeledForm q = parse_form_spec(o.spec);
  auto d = standard_pseudotrisection(q.matrix, o.k);
  if (intersection_form(d).matrix != q.matrix)
    throw Error(ErrorKind::AsymmetricResult, "constructed diagram does not reproduce its form");
  json j = diagram_to_json(d, q.label + (o.k ? " (k=" + std::to_string(o.k) + ")" : ""), q.label);
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(o.out);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + o.out);
    out << j.dump(2) << "\n";
    out.close();
    // Read the file back so the round trip covers serialization too.
    IntMatrix back = intersection_form(load_diagram_file(o.out).diagram).matrix;
    if (back != q.matrix) throw Error(ErrorKind::AsymmetricResult, "written diagram does not reproduce its form");
    std::cout << "wrote " << o.out << ": genus " << d.genus() << ", k " << d.k() << ", round trip ok\n";
  }
  return kOk;
}

int cmd_homology(const Options& o) {
  DiagramFile f = load_diagram_file(o.path);
  const auto& t = f.diagram.triple;
  std::pair<const char*, HeegaardPair> pairs[] = {{"alpha-beta", t.ab()}, {"beta-gamma", t.bc()}, {"gamma-alpha", t.ca()}};
  if (o.json_out) {
    json j;
    for (auto& [name, p] : pairs) j[name] = homology_to_json(heegaard_homology(p));
    j["valid"] = f.diagram.flags.valid();
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto& [name, p] : pairs) {
      auto r = heegaard_homology(p);
      std::cout << name << ": ";
      if (r.is_homology_sphere)
        std::cout << "homology sphere";
      else {
        std::cout << "free rank " << r.free_rank;
        if (!r.invariant_factors.empty()) {
          std::cout << ", torsion";
          for (auto& d : r.invariant_factors) std::cout << " Z/" << d;
        }
      }
      std::cout << "\n";
    }
    std::cout << "diagram: " << f.diagram.flags.describe() << "\n";
  }
  return kOk;
}

int cmd_johnson_span(const Options& o) {
  LabeledForm q = parse_form_spec(o.spec);
  auto [ab, c] = tab_tc_generators(q.matrix, o.k);
  auto values = ab.values();
  auto cv = c.values();
  values.insert(values.end(), cv.begin(), cv.end());
  auto cert = spans_wedge_cube(values, q.matrix.rows() + o.k);
  if (o.json_out) {
    json j = certificate_to_json(cert);
    j["form"] = q.label;
    j["k"] = o.k;
    j["families"] = {{"TAB", ab.elements.size()}, {"TC", c.elements.size()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "form " << q.label << ", k " << o.k << "\n"
              << "dimension " << cert.dimension << "\n"
              << "generators " << cert.num_generators << " (TAB " << ab.elements.size() << ", TC " << c.elements.size()
              << ")\n"
              << "invariant factors:";
    if (cert.factor_summary.empty()) std::cout << " none";
    for (auto& [factor, count] : cert.factor_summary) std::cout << " " << factor << " x " << count;
    std::cout << "\nspans over Z: " << yes_no(cert.spans_over_z) << "\n";
  }
  return cert.spans_over_z ? kOk : kFailed;
}

void print_linking(const LinkingForm& l) {
  const Index g = l.genus();
  std::cout << to_string(l.kind) << " on (";
  for (Index a = 0; a < 2 * g; ++a) std::cout << (a ? " " : "") << basis_label(g, a);
  std::cout << ")\n";
  print_matrix(l.matrix);
  std::cout << "q" << (l.kind == LinkingKind::L2 ? "2" : "3") << " basis values:";
  for (int v : enhancement(l).basis_values) std::cout << " " << v;
  std::cout << "\n";
}

int cmd_linking(const Options& o) {
  DiagramFile f = load_diagram_file(o.path);
  auto l2 = linking_form(f.diagram, LinkingKind::L2);
  auto l3 = linking_form(f.diagram, LinkingKind::L3);
  bool same = q2_equals_q3(f.diagram);
  if (o.json_out) {
    json j{{"l2", linking_to_json(l2)}, {"l3", linking_to_json(l3)}, {"q2_equals_q3", same}};
    std::cout << j.dump(2) << "\n";
  } else {
    print_linking(l2);
    print_linking(l3);
    std::cout << "q2 = q3: " << yes_no(same) << "\n";
  }
  return kOk;
}

int cmd_rohlin(const Options& o) {
  LabeledForm q = parse_form_spec(o.spec);
  auto r = rohlin_obstruction(q.matrix, q.label);
  if (o.json_out) {
    std::cout << obstruction_to_json(r).dump(2) << "\n";
  } else {
    std::cout << "form " << r.form_label << ", rank " << r.matrix.rows() << "\n"
              << "signature " << r.signature << " (" << r.signature_mod16 << " mod 16)\n"
              << "even: " << yes_no(r.even) << "\n";
    if (r.mu_sum) std::cout << "mu2 + mu3 = " << *r.mu_sum << " mod 2\n";
    std::cout << "verdict: " << to_string(r.verdict);
    if (r.verdict == Verdict::Obstructed)
      std::cout << " (no smooth closed spin 4-manifold with a (g;k,0,0)-trisection has this form)";
    std::cout << "\n";
  }
  return r.verdict == Verdict::Obstructed ? kFailed : kOk;
}

struct Check {
  std::string name;
  std::string status;  // pass, fail, expected-divergence, skipped
  std::string detail;
};

int cmd_verify(const Options& o) {
  const std::uint64_t seed = effective_seed(o.seed);
  DiagramFile f = load_diagram_file(o.path);
  const auto& d = f.diagram;
  std::vector<Check> checks;
  auto add = [&](std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
  };

  add("validity", d.flags.valid(), d.flags.describe());
  if (d.flags.valid()) {
    IntMatrix q = intersection_form(d).matrix;
    if (f.expected_form) add("expected form", parse_form_spec(*f.expected_form).matrix == q, *f.expected_form);
    auto l2 = linking_form(d, LinkingKind::L2);
    auto l3 = linking_form(d, LinkingKind::L3);
    add("l2 symmetry", satisfies_linking_symmetry(l2), "");
    add("l3 symmetry", satisfies_linking_symmetry(l3), "");
    const bool even = is_even(q);
    const bool same = q2_equals_q3(d);
    if (even)
      add("q2 = q3", same, "even form");
    else
      checks.push_back({"q2 = q3", same ? "pass" : "expected-divergence", "odd form, enhancements may differ"});

    if (even) {
      auto ctx = prepare_regluing(d);
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Index> twists(1, 4);
      Index bad = 0;
      for (Index r = 0; r < o.runs; ++r) {
        auto script = random_script(d.genus(), twists(rng), rng);
        auto ledger = apply_regluing(ctx, script);
        if (ledger.mu2_delta != ledger.mu3_delta || mu_sum_after(ctx, script) != ctx.base_mu) ++bad;
      }
      add("regluing invariance", bad == 0,
          std::to_string(o.runs) + " scripts, base mu " + std::to_string(ctx.base_mu) +
              (bad ? ", " + std::to_string(bad) + " violations" : ""));
    } else {
      checks.push_back({"regluing invariance", "skipped", "needs an even form"});
    }
  }

  bool ok = true;
  for (auto& c : checks) ok = ok && c.status != "fail";
  if (o.json_out) {
    json arr = json::array();
    for (auto& c : checks) arr.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    json j{{"seed", seed}, {"runs", o.runs}, {"checks", arr}, {"passed", ok}};
    if (!f.name.empty()) j["name"] = f.name;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "seed " << seed << "\n";
    for (auto& c : checks) {
      std::cout << c.status << "  " << c.name;
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    }
    std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact H_1-level computations for (g;k,0,0) pseudotrisection diagrams"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "Machine-readable output");

  auto* form = app.add_subcommand("form", "Intersection form of a diagram file");
  form->add_option("diagram", o.path, "Diagram JSON file")->required();

  auto* construct = app.add_subcommand("construct", "Standard diagram realizing a form");
  construct->add_option("form", o.spec, "E8, H, mE8+nH, ... or a JSON matrix")->required();
  construct->add_option("--k", o.k, "Number of S^1 x S^2 summands in the first pair")->check(CLI::NonNegativeNumber);
  construct->add_option("--out", o.out, "Write the diagram here instead of stdout");

  auto* homology = app.add_subcommand("homology", "H_1 of the three Heegaard pairs");
  homology->add_option("diagram", o.path, "Diagram JSON file")->required();

  auto* johnson = app.add_subcommand("johnson-span", "Check that the TAB and TC families span the wedge cube");
  johnson->add_option("form", o.spec, "Form spec")->required();
  johnson->add_option("--k", o.k, "Stabilization count")->check(CLI::NonNegativeNumber);

  auto* linking = app.add_subcommand("linking", "Linking forms l2, l3 and their enhancements");
  linking->add_option("diagram", o.path, "Diagram JSON file")->required();

  auto* rohlin = app.add_subcommand("rohlin", "Rohlin obstruction for a form");
  rohlin->add_option("form", o.spec, "Form spec")->required();

  auto* verify = app.add_subcommand("verify", "Run the invariant checks on one diagram");
  verify->add_option("diagram", o.path, "Diagram JSON file")->required();
  verify->add_option("--seed", o.seed, "Seed for random regluing scripts (TRISECT_SEED overrides)");
  verify->add_option("--runs", o.runs, "Number of random scripts")->check(CLI::NonNegativeNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*form) return cmd_form(o);
    if (*construct) return cmd_construct(o);
    if (*homology) return cmd_homology(o);
    if (*johnson) return cmd_johnson_span(o);
    if (*linking) return cmd_linking(o);
    if (*rohlin) return cmd_rohlin(o);
    if (*verify) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}

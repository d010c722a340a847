#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <map>
#include <memory>
#include <sstream>

#include "chowkit/error.hpp"
#include "chowkit/f4.hpp"
#include "chowkit/hasse.hpp"
#include "chowkit/rootsystem.hpp"

namespace chowkit::cli {

namespace {

using nlohmann::ordered_json;

struct Common {
  std::string type = "F4";
  std::string cartan_file;
  std::string theta;
  std::string format = "text";
  int jobs = 1;
};

// Wrong input the user can fix; reported as a usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_system_options(CLI::App* app, Common& c) {
  app->add_option("--type", c.type, "Root system name (A1..A8, B2..B8, C2..C8, D4..D8, G2, F4)")
      ->capture_default_str();
  app->add_option("--cartan-file", c.cartan_file, "Read the Cartan matrix from a file instead of --type");
}

void add_theta(CLI::App* app, Common& c, const std::string& help = "Parabolic nodes, 1-based (e.g. 2,3,4)") {
  app->add_option("--theta", c.theta, help);
}

void add_format(CLI::App* app, Common& c, std::vector<std::string> allowed) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(allowed)))->capture_default_str();
}

std::shared_ptr<const WeylGroup> make_group(const Common& c) {
  RootSystemPtr sys = c.cartan_file.empty() ? named_root_system(c.type)
                                            : build_root_system(load_cartan(c.cartan_file), 256, c.cartan_file);
  return std::make_shared<WeylGroup>(std::move(sys));
}

// Rings are shared by Θ so that correspondences between them compose.
class RingCache {
 public:
  explicit RingCache(std::shared_ptr<const WeylGroup> group) : group_(std::move(group)) {}
  RingPtr get(const std::string& theta_text) {
    const ParabolicSubset theta = parse_theta(theta_text, group_->rank());
    const std::string key = theta.to_string();
    if (auto it = rings_.find(key); it != rings_.end()) return it->second;
    auto ring = std::make_shared<ChowRing>(group_, theta);
    f4::apply_known_labels(*ring);
    return rings_[key] = ring;
  }
  const WeylGroup& group() const { return *group_; }

 private:
  std::shared_ptr<const WeylGroup> group_;
  std::map<std::string, RingPtr> rings_;
};

std::string coords_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

int cmd_roots(const Common& c, std::ostream& out) {
  const auto group = make_group(c);
  const RootSystem& sys = *group->system();
  if (c.format == "json") {
    ordered_json roots = ordered_json::array();
    for (const auto& r : sys.positive_roots()) roots.push_back({{"coords", r.coords}, {"height", r.height()}});
    out << ordered_json{{"type", sys.name()}, {"rank", sys.rank()}, {"roots", roots}}.dump(2) << '\n';
    return kOk;
  }
  for (const auto& r : sys.positive_roots()) out << coords_text(r.coords) << "  height " << r.height() << '\n';
  return kOk;
}

int cmd_weyl(const Common& c, const std::string& what, bool maximal, std::ostream& out) {
  const auto group = make_group(c);
  const WeylGroup& W = *group;
  const bool json = c.format == "json";
  if (what == "order") {
    if (json) {
      out << ordered_json{{"order", W.order()}}.dump(2) << '\n';
    } else {
      out << W.order() << '\n';
    }
  } else if (what == "longest") {
    // w0, or w_theta when --theta is given.
    const ElementId w = c.theta.empty() ? W.longest() : W.longest_of(parse_theta(c.theta, W.rank()));
    if (json) {
      out << ordered_json{{"length", W.length(w)}, {"word", W.format(w)}}.dump(2) << '\n';
    } else {
      out << W.format(w) << "  (length " << W.length(w) << ")\n";
    }
  } else {
    const ParabolicSubset theta = parse_theta(c.theta, W.rank());
    const ElementId w_theta = W.longest_of(theta);
    ordered_json arr = ordered_json::array();
    for (ElementId v : W.minimal_reps(theta)) {
      const ElementId w = maximal ? W.multiply(v, w_theta) : v;
      if (json) {
        arr.push_back({{"length", W.length(w)}, {"word", W.format(w)}});
      } else {
        out << W.length(w) << "  " << W.format(w) << '\n';
      }
    }
    if (json) out << arr.dump(2) << '\n';
  }
  return kOk;
}

int cmd_hasse(const Common& c, const std::string& rule, bool pieri, int node, bool by_codim, std::ostream& out) {
  RingCache rings(make_group(c));
  const RingPtr ring = rings.get(c.theta);
  Diagram d;
  if (pieri) {
    d = build_pieri_diagram(*ring, node > 0 ? std::optional<int>(node - 1) : std::nullopt);
  } else {
    d = build_hasse(ring->group_ptr(), ring->theta(), rule == "right" ? EdgeRule::Right : EdgeRule::Left);
  }
  if (c.format == "dot") {
    out << export_dot(d, by_codim);
  } else if (c.format == "json") {
    out << export_json(d) << '\n';
  } else {
    out << d.vertices.size() << " vertices, " << d.edges.size() << " edges\n";
    for (const auto& e : d.edges) {
      int from = e.source;
      int to = e.target;
      if (by_codim) std::swap(from, to);
      out << d.group->format(d.vertices[static_cast<std::size_t>(from)]) << " -> "
          << d.group->format(d.vertices[static_cast<std::size_t>(to)]);
      if (d.weighted) {
        out << "  x" << e.weight;
      } else if (e.label >= 0) {
        out << "  s" << e.label + 1;
      }
      out << '\n';
    }
  }
  return kOk;
}

int cmd_chow(const Common& c, const std::string& what, const std::vector<std::string>& args, int node,
             std::ostream& out) {
  RingCache rings(make_group(c));
  const RingPtr ring = rings.get(c.theta);
  const bool json = c.format == "json";
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw UsageError("chow " + what + " takes " + std::to_string(n) + " argument(s)");
  };
  if (what == "basis") {
    need(0);
    ordered_json arr = ordered_json::array();
    for (int k : ring->display_order()) {
      if (json) {
        arr.push_back({{"index", k}, {"codim", ring->codim(k)}, {"label", ring->label(k)}, {"word", ring->word(k)}});
      } else {
        out << ring->codim(k) << "  " << ring->label(k) << "  [" << ring->word(k) << "]\n";
      }
    }
    if (json) out << arr.dump(2) << '\n';
  } else if (what == "mult") {
    need(2);
    const ChowElement product = ring->multiply(ring->parse(args[0]), ring->parse(args[1]));
    out << (json ? element_json(*ring, product) : ring->format(product)) << '\n';
  } else if (what == "table") {
    need(0);
    const auto rows = pieri_table(*ring, node > 0 ? std::optional<int>(node - 1) : std::nullopt);
    out << (json ? table_json(*ring, rows) + "\n" : table_text(*ring, rows));
  } else {
    need(1);
    const Polynomial lift = ring->giambelli_lift(ring->find(args[0]));
    if (json) {
      out << ordered_json{{"class", args[0]}, {"polynomial", to_string(lift)}}.dump(2) << '\n';
    } else {
      out << to_string(lift) << '\n';
    }
  }
  return kOk;
}

struct CorrOptions {
  std::string via;
  std::string to;
  int mod = 0;
  std::string eps = "1";
};

int cmd_corr(const Common& c, const CorrOptions& o, const std::string& what, const std::vector<std::string>& args,
             std::ostream& out) {
  RingCache rings(make_group(c));
  const int eps = o.eps == "-1" ? -1 : 1;
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw UsageError("corr " + what + " takes " + std::to_string(n) + " argument(s)");
  };
  const RingPtr X = rings.get(c.theta);
  std::optional<Correspondence> result;
  if (what == "diagonal") {
    need(0);
    result = diagonal(X);
  } else if (what == "transpose") {
    need(1);
    const RingPtr Y = rings.get(o.to.empty() ? c.theta : o.to);
    result = transpose(parse_correspondence(X, Y, args[0], eps));
  } else {
    need(2);
    const RingPtr Y = rings.get(o.via.empty() ? c.theta : o.via);
    const RingPtr Z = rings.get(o.to.empty() ? c.theta : o.to);
    const Correspondence first = parse_correspondence(X, Y, args[0], eps);
    const Correspondence second = parse_correspondence(Y, Z, args[1], eps);
    result = compose(second, first);
  }
  const Correspondence reduced = mod_reduce(*result, o.mod);
  out << (c.format == "json" ? to_json(reduced) : format(reduced)) << '\n';
  return kOk;
}

int cmd_verify(const Common& c, const std::string& eps, const std::string& report_path, bool timings,
               std::ostream& out) {
  f4::PipelineOptions options;
  options.jobs = c.jobs;
  if (eps == "1" || eps == "+1") options.eps = {1};
  if (eps == "-1") options.eps = {-1};
  std::ofstream report_file;
  if (!report_path.empty()) {
    report_file.open(report_path);
    if (!report_file) throw UsageError("cannot write report to " + report_path);
  }
  const VerificationReport report = f4::run_pipeline(options);
  if (report_file.is_open()) report_file << report.to_json(timings);
  out << (c.format == "json" ? report.to_json(timings) : report.to_text(timings));
  return report.all_passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert calculus on G/P and correspondences between flag varieties", "chowkit"};
  app.require_subcommand(1);
  Common common;

  auto* roots = app.add_subcommand("roots", "List the positive roots");
  add_system_options(roots, common);
  add_format(roots, common, {"text", "json"});

  std::string weyl_what;
  bool maximal = false;
  auto* weyl = app.add_subcommand("weyl", "Weyl group data");
  weyl->add_option("what", weyl_what, "order | longest | cosets")
      ->required()
      ->check(CLI::IsMember({"order", "longest", "cosets"}));
  add_system_options(weyl, common);
  add_theta(weyl, common);
  add_format(weyl, common, {"text", "json"});
  weyl->add_flag("--maximal", maximal, "List maximal instead of minimal coset representatives");

  std::string rule = "left";
  bool pieri = false;
  bool by_codim = false;
  int node = 0;
  auto* hasse = app.add_subcommand("hasse", "Export the Hasse diagram of W^Theta");
  add_system_options(hasse, common);
  add_theta(hasse, common);
  add_format(hasse, common, {"text", "json", "dot"});
  hasse->add_option("--rule", rule, "Edge rule: left (w -> s_i w) or right (w -> w s_i)")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  hasse->add_flag("--pieri", pieri, "Weight the edges by Chevalley coefficients");
  hasse->add_option("--node", node, "Divisor node for --pieri, 1-based");
  hasse->add_flag("--by-codim", by_codim, "Point edges towards increasing codimension");

  std::string chow_what;
  std::vector<std::string> chow_args;
  auto* chow = app.add_subcommand("chow", "Chow ring of G/P_Theta");
  chow->add_option("what", chow_what, "basis | mult | table | giambelli-lift")
      ->required()
      ->check(CLI::IsMember({"basis", "mult", "table", "giambelli-lift"}));
  chow->add_option("args", chow_args, "Classes or elements, e.g. h1^4 or \"2h1^8 + h2^8\"");
  add_system_options(chow, common);
  add_theta(chow, common);
  add_format(chow, common, {"text", "json"});
  chow->add_option("--node", node, "Divisor node for the table, 1-based");
  chow->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string corr_what;
  std::vector<std::string> corr_args;
  CorrOptions corr_opts;
  auto* corr = app.add_subcommand("corr", "Correspondences on products of G/P's");
  corr->add_option("what", corr_what, "compose | transpose | diagonal")
      ->required()
      ->check(CLI::IsMember({"compose", "transpose", "diagonal"}));
  corr->add_option("args", corr_args, "compose FIRST SECOND gives SECOND o FIRST");
  add_system_options(corr, common);
  add_theta(corr, common, "Theta of the source variety, 1-based");
  corr->add_option("--via", corr_opts.via, "Theta of the middle variety for compose (default: --theta)");
  corr->add_option("--to", corr_opts.to, "Theta of the target variety (default: --theta)");
  corr->add_option("--mod", corr_opts.mod, "Reduce coefficients to balanced residues")
      ->check(CLI::IsMember({0, 3}))
      ->capture_default_str();
  corr->add_option("--eps", corr_opts.eps, "Value substituted for eps")
      ->check(CLI::IsMember({"1", "+1", "-1"}))
      ->capture_default_str();
  add_format(corr, common, {"text", "json"});

  std::string verify_target;
  std::string eps = "both";
  std::string report_path;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Run a verification pipeline");
  verify->add_option("target", verify_target, "Pipeline name")->required()->check(CLI::IsMember({"f4"}));
  verify->add_option("--eps", eps, "Sign parameter")->check(CLI::IsMember({"1", "+1", "-1", "both"}))->capture_default_str();
  verify->add_option("--report", report_path, "Write the JSON report to this path");
  verify->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", timings, "Include wall times in the report");
  add_format(verify, common, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*roots) return cmd_roots(common, out);
    if (*weyl) return cmd_weyl(common, weyl_what, maximal, out);
    if (*hasse) return cmd_hasse(common, rule, pieri, node, by_codim, out);
    if (*chow) return cmd_chow(common, chow_what, chow_args, node, out);
    if (*corr) return cmd_corr(common, corr_opts, corr_what, corr_args, out);
    return cmd_verify(common, eps, report_path, timings, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InfiniteRootSystemError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace chowkit::cli

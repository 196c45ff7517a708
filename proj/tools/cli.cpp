#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

#include "splitnull/census.hpp"
#include "splitnull/composition.hpp"
#include "splitnull/determinant.hpp"
#include "splitnull/graph_io.hpp"
#include "splitnull/nullspace.hpp"
#include "splitnull/oracle.hpp"

namespace splitnull::cli {

namespace {

using nlohmann::json;

json set_json(const VertexSet& vs) { return json(vs.members()); }

json vector_json(const QVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

json basis_json(const QSubspace& b) {
  json out = json::array();
  for (Index c = 0; c < b.dim(); ++c) out.push_back(vector_json(b.vector(c)));
  return out;
}

// Determinants are integers; small ones print as JSON numbers, the rest as
// decimal strings so nothing is rounded.
json integer_json(const Rational& q) {
  const mpz_class num = q.numerator();
  if (q.is_integer() && num.fits_slong_p()) return num.get_si();
  return q.str();
}

json partition_json(const SPartition& p) {
  return {{"clique", set_json(p.clique)}, {"independent", set_json(p.independent)}};
}

VertexSet parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ParseError("bad vertex '" + item + "' in --clique");
    out.push_back(v);
  }
  return VertexSet(std::move(out));
}

struct GraphInput {
  std::string path = "-";
  std::string format = "auto";

  Graph load() const { return parse_graph(read_text(path), parse_format_name(format)); }
};

struct SplitInput : GraphInput {
  std::optional<std::string> clique;

  /// The recognised s-partition, or the one whose clique side is --clique.
  SplitGraph load_split() const {
    Graph g = load();
    if (clique) {
      const VertexSet k = parse_vertex_list(*clique);
      SPartition p{k, VertexSet::range(g.order()) - k};
      if (!is_s_partition(g, p)) throw DomainError("--clique " + k.str() + " does not give an s-partition");
      return SplitGraph(std::move(g), std::move(p));
    }
    auto sp = recognize_split(g);
    if (!sp) throw DomainError("input graph is not split");
    return std::move(*sp);
  }
};

void add_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("-i,--input", in.path, "graph file, '-' for stdin")->capture_default_str();
  cmd->add_option("-f,--format", in.format, "graph6 | edges | auto")->capture_default_str();
}

void add_split_input(CLI::App* cmd, SplitInput& in) {
  add_input(cmd, in);
  cmd->add_option("--clique", in.clique, "comma-separated clique side of the s-partition to use");
}

json nullity_json(const SplitGraph& sp) {
  const NullityReport r = nullity(sp);
  json j{{"nullity", r.nullity}, {"nul_R", r.nul_R}, {"rank_R", r.rank_R}};
  if (r.clique_kernel) {
    j["cliqueker_dim"] = r.clique_kernel->dimension;
    j["generator"] = r.clique_kernel->generator ? vector_json(*r.clique_kernel->generator) : json(nullptr);
  } else {
    j["cliqueker_dim"] = nullptr;
    j["generator"] = nullptr;
  }
  j["support"] = set_json(r.support);
  j["support_meets_clique"] = r.support_meets_clique;
  j["partition"] = partition_json(sp.partition());
  return j;
}

json kernel_json(const SplitGraph& sp) {
  const KernelBasis kb = structured_kernel_basis(sp);
  json kinds = json::array();
  for (auto k : kb.kinds) kinds.push_back(k == KernelVectorKind::clique_supported ? "clique" : "independent");
  return {{"ordering", kb.ordering},
          {"vectors", basis_json(kb.vectors)},
          {"kinds", kinds},
          {"pivot_columns", kb.pivot_columns},
          {"free_columns", kb.free_columns},
          {"z", kb.z ? vector_json(*kb.z) : json(nullptr)},
          {"y0", kb.y0 ? vector_json(*kb.y0) : json(nullptr)},
          {"rank_R", kb.rank_R},
          {"rank", kb.rank_sp},
          {"partition", partition_json(sp.partition())}};
}

json support_json(const SplitGraph& sp) {
  const PredicateReport pr = support_location_predicates(sp);
  json imps = json::array();
  for (const auto& im : pr.implications)
    imps.push_back({{"id", im.id}, {"hypothesis", im.hypothesis}, {"conclusion", im.conclusion}, {"holds", im.holds()}});
  return {{"support", set_json(pr.support)},
          {"ones_in_image_R", pr.ones_in_image_R},
          {"support_in_S", pr.support_in_S},
          {"implications", imps},
          {"partition", partition_json(sp.partition())}};
}

json partitions_json(const SplitGraph& sp) {
  const SwingReport sw = swing_report(sp);
  json parts = json::array();
  for (const auto& p : sw.all_partitions) parts.push_back(partition_json(p));
  return {{"partitions", parts},
          {"balance", to_string(balance_class(sp))},
          {"omega", clique_number(sp)},
          {"alpha", independence_number(sp)},
          {"swing", {{"W", set_json(sw.swing)},
                     {"K_star", set_json(sw.always_clique)},
                     {"S_star", set_json(sw.always_independent)},
                     {"class", to_string(sw.classification)}}}};
}

json det_json(const SplitGraph& sp) {
  const Rational oracle = det_bareiss(sp.adjacency());
  if (sp.clique_size() < 2) return {{"formula", nullptr}, {"oracle", integer_json(oracle)}, {"agree", nullptr}};
  const Rational formula = det_split_schur(sp);
  return {{"formula", integer_json(formula)}, {"oracle", integer_json(oracle)}, {"agree", formula == oracle}};
}

int emit(std::ostream& out, const json& j, bool quiet) {
  if (!quiet) out << j.dump(2) << '\n';
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact nullspace analysis of split graphs"};
  app.name("splitnull");
  app.require_subcommand(1);
  app.fallthrough();
  bool want_json = false;
  bool quiet = false;
  app.add_flag("--json", want_json, "JSON output (already the default for reports)");
  app.add_flag("-q,--quiet", quiet, "no output; the exit code carries the answer");

  GraphInput g_in;
  SplitInput s_in;
  auto* recognize = app.add_subcommand("recognize", "s-partition or 'not split'");
  add_input(recognize, g_in);
  auto* partitions = app.add_subcommand("partitions", "all s-partitions and swing vertices");
  auto* nullity_cmd = app.add_subcommand("nullity", "nullity, nul(R) and the clique kernel");
  auto* kernel = app.add_subcommand("kernel", "structured kernel basis");
  auto* support_cmd = app.add_subcommand("support", "support and sufficient-condition predicates");
  auto* det = app.add_subcommand("det", "determinant by formula and by elimination");
  for (auto* cmd : {partitions, nullity_cmd, kernel, support_cmd, det}) add_split_input(cmd, s_in);

  SplitInput left;
  GraphInput right;
  auto* compose = app.add_subcommand("compose", "Tyshkevich composition left o right");
  compose->add_option("--left", left.path, "split graph")->required();
  compose->add_option("--right", right.path, "any graph")->required();
  compose->add_option("--left-clique", left.clique, "clique side of the left s-partition");
  compose->add_option("-f,--format", left.format, "format of both inputs")->capture_default_str();

  CensusOptions copt;
  auto* census = app.add_subcommand("census", "exhaustive and randomized theorem census");
  census->add_option("--n-max", copt.n_max, "exhaustive over all labelled graphs with n <= N")->capture_default_str();
  census->add_option("--random", copt.random_rounds, "random split graphs")->capture_default_str();
  census->add_option("--random-max-order", copt.random_max_order)->capture_default_str();
  census->add_option("--compositions", copt.composition_rounds, "random composition pairs")->capture_default_str();
  census->add_option("--composition-max-order", copt.composition_max_order)->capture_default_str();
  census->add_option("--square-max-half", copt.square_max_half, "exhaustive square pairs with |K| = |S| <= this")
      ->capture_default_str();
  census->add_option("--seed", copt.seed)->capture_default_str();
  census->add_option("--workers", copt.workers, "0: one per hardware thread")->capture_default_str();
  census->add_option("--max-counterexamples", copt.max_counterexamples)->capture_default_str();
  census->add_flag("--allow-large", copt.allow_large, "permit n-max = 8");

  auto* verify = app.add_subcommand("verify", "full theorem suite on one graph");
  add_input(verify, g_in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*recognize) {
      const Graph g = g_in.load();
      const auto sp = recognize_split(g);
      if (!quiet) {
        if (want_json)
          out << (sp ? json{{"split", true}, {"partition", partition_json(sp->partition())}} : json{{"split", false}})
                         .dump(2)
              << '\n';
        else
          out << (sp ? sp->partition().str() : std::string("not split")) << '\n';
      }
      return sp ? ok : negative;
    }
    if (*partitions) return emit(out, partitions_json(s_in.load_split()), quiet);
    if (*nullity_cmd) return emit(out, nullity_json(s_in.load_split()), quiet);
    if (*kernel) return emit(out, kernel_json(s_in.load_split()), quiet);
    if (*support_cmd) return emit(out, support_json(s_in.load_split()), quiet);
    if (*det) return emit(out, det_json(s_in.load_split()), quiet);
    if (*compose) {
      right.format = left.format;
      const SplitGraph sp = left.load_split();
      const Graph g = right.load();
      const Graph h = tyshkevich_compose(sp, g);
      json j{{"graph6", write_graph6(h)},
             {"order", h.order()},
             {"edges", h.edges().size()},
             {"ordering", composition_ordering(sp, g)},
             {"embedded_kernel_vectors", basis_json(embedded_kernel_vectors(sp, g))}};
      if (auto sp2 = recognize_split(g))
        j["partition"] = partition_json(tyshkevich_compose(sp, *sp2).partition());
      else
        j["partition"] = nullptr;
      return emit(out, j, quiet);
    }
    if (*census) {
      const CensusReport r = census_verify(copt);
      emit(out, to_json(r), quiet);
      return r.ok() ? ok : negative;
    }
    if (*verify) {
      const CensusReport r = verify_graph(g_in.load());
      emit(out, to_json(r), quiet);
      return r.ok() ? ok : negative;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const DimensionError& e) {
    err << "domain error: " << e.what() << '\n';
    return domain;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return domain;
  } catch (const TheoremViolation& e) {
    err << "identity violated: " << e.what() << '\n';
    return negative;
  }
  return usage;
}

}  // namespace splitnull::cli

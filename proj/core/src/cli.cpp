#include "mua/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mua/canonical.hpp"
#include "mua/distance.hpp"
#include "mua/extnat.hpp"
#include "mua/finite_algebra.hpp"
#include "mua/large.hpp"
#include "mua/monoalg.hpp"
#include "mua/network.hpp"
#include "mua/qz.hpp"

namespace mua {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MonoAlg load_mua(const std::string& path) { return parse_mua(read_file(path)); }

std::string join(const std::vector<int>& xs, const char* sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

FiniteAlgebra make_builtin(const std::string& spec) {
  size_t colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  int arg = 0;
  if (colon != std::string::npos) {
    try {
      arg = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad builtin parameter in '" + spec + "'");
    }
  } else {
    throw std::invalid_argument("builtin spec must look like sym:4, alt:4, bool:3 or cyclic:6");
  }
  if (kind == "sym") return symmetric_group(arg);
  if (kind == "alt") return alternating_group(arg);
  if (kind == "bool") return boolean_algebra(arg);
  if (kind == "cyclic") return cyclic_group(arg);
  throw std::invalid_argument("unknown builtin '" + kind + "'");
}

void cmd_net(const std::string& file, const std::string& builtin,
             const std::string& dot_path, std::ostream& out) {
  if (file.empty() == builtin.empty())
    throw std::invalid_argument("net: give exactly one of FILE.fa or --builtin");
  FiniteAlgebra fa = builtin.empty() ? parse_fa(read_file(file))
                                     : make_builtin(builtin);
  SubalgebraNetwork sn = build_subalgebra_network(fa);
  out << "vertices " << sn.net.size() << "\n";
  out << "red " << sn.net.red_edges.size() << "\n";
  out << "blue " << sn.net.blue_edges.size() << "\n";
  for (int v = 0; v < sn.net.size(); ++v)
    out << "v" << v << " size=" << sn.vertices[v].elements.size() << " class=c"
        << sn.iso_class[v] << " large=" << (sn.large_in_ambient[v] ? "YES" : "NO")
        << " elements={" << join(sn.vertices[v].elements, ",") << "}\n";
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path, std::ios::binary);
    if (!dot) throw ParseError("cannot write file '" + dot_path + "'");
    dot << export_dot(sn.net);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"monounary algebra toolkit: generator distances and networks of large embeddings"};
  app.name("mua");
  app.require_subcommand(1);

  std::string file_a, file_b, net_file, builtin, dot_path, left, right, seq;
  int cap = -1;

  auto* dist = app.add_subcommand("dist", "generator distance between two .mua algebras");
  dist->add_option("A", file_a, "first .mua file")->required();
  dist->add_option("B", file_b, "second .mua file")->required();

  auto* oracle = app.add_subcommand(
      "oracle-dist", "distance by breadth-first search over the class network");
  oracle->add_option("A", file_a, "first .mua file")->required();
  oracle->add_option("B", file_b, "second .mua file")->required();
  oracle->add_option("--cap", cap, "largest class size in the network (default |A|+|B|)");

  auto* mg = app.add_subcommand("mgen", "minimal number of generators");
  mg->add_option("A", file_a, ".mua file")->required();

  auto* core_cmd = app.add_subcommand("core", "cycle of each component");
  core_cmd->add_option("A", file_a, ".mua file")->required();

  auto* canon = app.add_subcommand("canon", "canonical code");
  canon->add_option("A", file_a, ".mua file")->required();

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("A", file_a, "first .mua file")->required();
  iso->add_option("B", file_b, "second .mua file")->required();

  auto* comps = app.add_subcommand("components", "connected components");
  comps->add_option("A", file_a, ".mua file")->required();

  auto* large = app.add_subcommand("large", "large-embeddability test with witness kind");
  large->add_option("A", file_a, "first .mua file")->required();
  large->add_option("B", file_b, "second .mua file")->required();

  auto* net = app.add_subcommand("net", "subalgebra network of a finite algebra");
  net->add_option("FILE", net_file, ".fa operation-table file");
  net->add_option("--builtin", builtin, "sym:N, alt:N, bool:K or cyclic:N");
  net->add_option("--dot", dot_path, "write the network as DOT to this path");

  auto* qz_cmd = app.add_subcommand("qz", "choice-sequence subgroups of Q/Z");
  qz_cmd->require_subcommand(1);
  auto* qz_dist = qz_cmd->add_subcommand("dist", "distance between two subgroups");
  qz_dist->add_option("--left", left, "first sequence, default=<nat|inf>[;i:v,...]")->required();
  qz_dist->add_option("--right", right, "second sequence")->required();
  auto* qz_diam = qz_cmd->add_subcommand("diam", "component diameter of a subgroup");
  qz_diam->add_option("SPEC", seq, "sequence, default=<nat|inf>[;i:v,...]")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (dist->parsed()) {
      out << distance(load_mua(file_a), load_mua(file_b)).str() << "\n";
    } else if (oracle->parsed()) {
      MonoAlg a = load_mua(file_a), b = load_mua(file_b);
      if (cap < 0) cap = a.n + b.n;
      MonounaryNetwork mn = build_monounary_network(cap);
      auto ia = mn.find(a), ib = mn.find(b);
      if (!ia || !ib)
        throw std::invalid_argument("oracle-dist: --cap " + std::to_string(cap) +
                                    " is below an input size");
      auto d = distances_within_cap(mn, *ia, cap);
      out << (d[*ib] < 0 ? Distance::infinity() : Distance(d[*ib])).str() << "\n";
    } else if (mg->parsed()) {
      out << mgen(load_mua(file_a)) << "\n";
    } else if (core_cmd->parsed()) {
      MonoAlg a = load_mua(file_a);
      for (const Component& c : components(a))
        out << join(core_of(c).cycle, " ") << "\n";
    } else if (canon->parsed()) {
      out << canonical_code(load_mua(file_a)).bytes << "\n";
    } else if (iso->parsed()) {
      out << (is_isomorphic(load_mua(file_a), load_mua(file_b)) ? "true" : "false")
          << "\n";
    } else if (comps->parsed()) {
      MonoAlg a = load_mua(file_a);
      for (const Component& c : components(a)) out << join(c.elements, " ") << "\n";
    } else if (large->parsed()) {
      auto [ok, w] = is_largely_embeddable(load_mua(file_a), load_mua(file_b));
      if (!ok) {
        out << "NO\n";
      } else if (w->kind == LargeEmbedWitness::Kind::DisjointMpl) {
        out << "YES disjoint-mpl(" << w->n << "," << w->l << ")\n";
      } else {
        out << "YES tail(" << w->at << "," << w->m << ")\n";
      }
    } else if (net->parsed()) {
      cmd_net(net_file, builtin, dot_path, out);
    } else if (qz_dist->parsed()) {
      out << qz_distance(parse_choice_seq(left), parse_choice_seq(right)).str()
          << "\n";
    } else if (qz_diam->parsed()) {
      out << qz_diameter(parse_choice_seq(seq)).str() << "\n";
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace mua

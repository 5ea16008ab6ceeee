// qdg: command-line front end. Every command reads and writes JSON; errors
// are printed to stderr as {"code", "message", "location"}.
//
// Exit codes: 0 success, 1 input or usage error, 2 verification failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "qdg/canonical.hpp"
#include "qdg/json_io.hpp"
#include "qdg/qv.hpp"
#include "qdg/rewriting.hpp"
#include "qdg/verify.hpp"

namespace {

  using namespace qdg;

  std::string read_input(std::string const& path) {
    if (path.empty() || path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("io_error", "cannot open " + path, path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_output(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text << std::flush;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error("io_error", "cannot write " + path, path);
    }
    out << text;
  }

  std::string dumped(Json const& j) {
    return j.dump(2) + "\n";
  }

  // Prefixes the JSON pointer of an error with the file it came from.
  template <typename F>
  auto with_source(std::string const& path, F&& f) {
    try {
      return f();
    } catch (Error const& e) {
      auto src = path.empty() || path == "-" ? std::string("<stdin>") : path;
      throw Error(e.code(), e.what(), e.location().empty() ? src : src + "#" + e.location());
    }
  }

  Diagram load_diagram(std::string const& path) {
    auto text = read_input(path);
    return with_source(path, [&] { return diagram_from_json(parse_json(text, "")); });
  }

  GroupElement load_element(std::string const& path) {
    auto d = load_diagram(path);
    auto base = top_label(d);
    return with_source(path, [&] { return GroupElement(std::move(d), std::move(base)); });
  }

  struct Io {
    std::string in;
    std::string out;
  };

  void add_io(CLI::App* cmd, Io& io) {
    cmd->add_option("input,--in", io.in, "input JSON file (default: stdin)");
    cmd->add_option("--out", io.out, "output file (default: stdout)");
  }

  int run(int argc, char** argv) {
    CLI::App app{"diagram groups over semigroup presentations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qdg 0.1.0");

    Io reduce_io;
    auto* reduce_cmd = app.add_subcommand("reduce", "remove all dipoles and print the canonical diagram");
    add_io(reduce_cmd, reduce_io);

    std::string mul_a, mul_b, mul_out;
    auto* mul_cmd = app.add_subcommand("mul", "stack a on top of b and reduce");
    mul_cmd->add_option("a", mul_a, "upper diagram")->required();
    mul_cmd->add_option("b", mul_b, "lower diagram")->required();
    mul_cmd->add_option("--out", mul_out, "output file (default: stdout)");

    Io inv_io;
    auto* inv_cmd = app.add_subcommand("inv", "mirror image, reduced");
    add_io(inv_cmd, inv_io);

    Io canon_io;
    std::string flavor = "full";
    bool canon_code = false;
    auto* canon_cmd = app.add_subcommand("canon", "canonical representative (or code) without reducing");
    add_io(canon_cmd, canon_io);
    canon_cmd->add_option("--flavor", flavor, "full | bottom-unordered | bottom-cyclic");
    canon_cmd->add_flag("--code", canon_code, "print the canonical code in hex instead");

    Io eval_io;
    std::string address;
    std::uint32_t tree = 0;
    auto* eval_cmd = app.add_subcommand("eval", "image of a vertex of the forest");
    add_io(eval_cmd, eval_io);
    eval_cmd->add_option("--address", address, "0/1 path from the root; e or ε for the root")->required();
    eval_cmd->add_option("--tree", tree, "tree or isolated point index");

    Io to_tp_io;
    auto* to_tp_cmd = app.add_subcommand("to-treepair", "tree pair of an element with base word x");
    add_io(to_tp_cmd, to_tp_io);

    Io from_tp_io;
    auto* from_tp_cmd = app.add_subcommand("from-treepair", "reduced diagram of a tree pair");
    add_io(from_tp_cmd, from_tp_io);

    Io member_io;
    std::string member_family;
    auto* member_cmd = app.add_subcommand("member", "membership in QF or QT");
    add_io(member_cmd, member_io);
    member_cmd->add_option("--family", member_family, "qf | qt")->required();

    std::string link_family, link_out;
    std::size_t link_k = 0, link_l = 0;
    int link_dim = -1;
    auto* link_cmd = app.add_subcommand("link", "descending link of x^k a^l as a simplicial complex");
    link_cmd->add_option("--family", link_family, "qf | qt | qv")->required();
    link_cmd->add_option("--k", link_k, "number of x contacts")->required();
    link_cmd->add_option("--l", link_l, "number of a contacts")->required();
    link_cmd->add_option("--max-dim", link_dim, "largest simplex dimension to store (default: all)");
    link_cmd->add_option("--out", link_out, "output file (default: stdout)");

    Io hom_io;
    int max_degree = 1;
    bool modular = false;
    auto* hom_cmd = app.add_subcommand("homology", "reduced homology of a complex");
    add_io(hom_cmd, hom_io);
    hom_cmd->add_option("--max-degree", max_degree, "highest degree to compute");
    hom_cmd->add_flag("--modular", modular, "ranks mod 2, 3 and 46337 instead of Smith normal form");

    std::vector<std::string> verify_families;
    std::vector<int> verify_ns;
    std::optional<std::size_t> verify_k, verify_l;
    bool verify_override = false;
    std::string verify_mode, verify_out;
    auto* verify_cmd = app.add_subcommand("verify", "connectivity of descending links at the bounds");
    verify_cmd->add_option("--family", verify_families, "qf | qt | qv (default: all three)");
    verify_cmd->add_option("--n", verify_ns, "connectivity degree (default: 0 and 1)");
    verify_cmd->add_option("--k", verify_k, "x contacts (default: the bound)");
    verify_cmd->add_option("--l", verify_l, "a contacts (default: the bound)");
    verify_cmd->add_flag("--override", verify_override, "allow (k, l) below the bound; results are exploratory");
    verify_cmd->add_option("--mode", verify_mode, "strict | homology-only");
    verify_cmd->add_option("--out", verify_out, "output file (default: stdout)");

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const&) {
      std::cout << app.help();
      return 0;
    } catch (CLI::CallForVersion const&) {
      std::cout << "qdg 0.1.0\n";
      return 0;
    } catch (CLI::ParseError const& e) {
      std::cerr << error_json(Error("usage", e.what())).dump() << "\n";
      return 1;
    }

    if (*reduce_cmd) {
      write_output(reduce_io.out, serialize_diagram(reduce(load_diagram(reduce_io.in))));
    } else if (*mul_cmd) {
      auto a = load_diagram(mul_a);
      auto b = load_diagram(mul_b);
      write_output(mul_out, serialize_diagram(reduce(concatenate(a, b))));
    } else if (*inv_cmd) {
      write_output(inv_io.out, serialize_diagram(reduce(invert(load_diagram(inv_io.in)))));
    } else if (*canon_cmd) {
      auto f = parse_flavor(flavor);
      auto d = load_diagram(canon_io.in);
      write_output(canon_io.out, canon_code ? to_hex(canonical_code(d, f)) + "\n"
                                            : dumped(to_json(canonical_form(d, f))));
    } else if (*eval_cmd) {
      auto g = load_element(eval_io.in);
      write_output(eval_io.out, to_string(evaluate(g, parse_address(address, tree))) + "\n");
    } else if (*to_tp_cmd) {
      write_output(to_tp_io.out, dumped(to_json(diagram_to_treepair(load_element(to_tp_io.in)))));
    } else if (*from_tp_cmd) {
      auto text = read_input(from_tp_io.in);
      auto tp = with_source(from_tp_io.in, [&] { return treepair_from_json(parse_json(text, "")); });
      write_output(from_tp_io.out, serialize_diagram(treepair_to_diagram(tp).diagram()));
    } else if (*member_cmd) {
      auto family = parse_family(member_family);
      if (family == Family::QV) {
        throw Error("bad_family", "member takes qf or qt");
      }
      auto g = load_element(member_io.in);
      bool in = family == Family::QF ? member_QF(g) : member_QT(g);
      write_output(member_io.out, in ? "true\n" : "false\n");
    } else if (*link_cmd) {
      auto link = abstract_descending_link(link_k, link_l, parse_family(link_family), link_dim);
      write_output(link_out, dumped(to_json(link.complex)));
    } else if (*hom_cmd) {
      auto text = read_input(hom_io.in);
      auto k = with_source(hom_io.in, [&] { return complex_from_json(parse_json(text, "")); });
      HomologyOptions options;
      options.modular = modular;
      write_output(hom_io.out, dumped(to_json(homology(k, max_degree, options))));
    } else if (*verify_cmd) {
      if (verify_families.empty()) {
        verify_families = {"qf", "qt", "qv"};
      }
      if (verify_ns.empty()) {
        verify_ns = {0, 1};
      }
      std::optional<ConnectivityMode> mode;
      if (verify_mode == "strict") {
        mode = ConnectivityMode::strict;
      } else if (verify_mode == "homology-only") {
        mode = ConnectivityMode::homology_only;
      } else if (!verify_mode.empty()) {
        throw Error("usage", "--mode must be strict or homology-only");
      }
      std::vector<VerificationPlan> plans;
      for (auto const& f : verify_families) {
        for (int n : verify_ns) {
          plans.push_back(make_plan(parse_family(f), n, verify_k, verify_l, verify_override, mode));
        }
      }
      auto results = run_plans(plans, worker_limit());
      Json rows = Json::array();
      bool all_pass = true;
      for (auto const& r : results) {
        rows.push_back(to_json(r));
        all_pass = all_pass && (r.passed || r.plan.exploratory);
      }
      write_output(verify_out, dumped(Json{{"results", rows}, {"pass", all_pass}}));
      return all_pass ? 0 : 2;
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (qdg::Error const& e) {
    std::cerr << qdg::error_json(e).dump() << "\n";
  } catch (std::exception const& e) {
    std::cerr << qdg::error_json(qdg::Error("internal", e.what())).dump() << "\n";
  }
  return 1;
}

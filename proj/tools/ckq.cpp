// ckq: describe, verify, contract and classify quantum Cayley-Klein groups.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ckq/report.hpp"

using namespace ckq;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupSpec load_spec(const std::string& arg) {
  std::string text = arg;
  auto first = arg.find_first_not_of(" \t\n");
  if (first == std::string::npos || arg[first] != '{') {
    std::ifstream in(arg);
    if (!in) throw InputError("cannot read spec file " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return spec_from_json(text);
}

IndexSet parse_indices(const std::string& s) {
  std::vector<int> ks;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      ks.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw InputError("bad index list: " + s);
    }
  }
  return index_set(ks);
}

struct Output {
  std::string path;
  void write(const std::string& s) const {
    if (path.empty()) {
      std::cout << s;
      if (!s.empty() && s.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << s;
    if (!s.empty() && s.back() != '\n') out << '\n';
  }
};

int cmd_describe(const GroupSpec& g, const std::string& format, const Output& out) {
  out.write(format == "json" ? describe_json(g) : describe_text(g));
  return kPass;
}

int cmd_verify(const GroupSpec& g, const VerifyOptions& vo, const std::string& format, const Output& out) {
  auto rep = verify_spec(g, vo);
  out.write(format == "json" ? verify_json(g, vo, rep) : verify_text(rep));
  return rep.ok() ? kPass : kFail;
}

int cmd_contract(const GroupSpec& g, const ContractOptions& co, const std::string& format, const Output& out) {
  if (g.nilpotent() == 0) throw InvalidSpec("contract: the spec has no nilpotent parameter");
  auto r = contract_report(g, co);
  out.write(format == "json" ? contract_json(r) : contract_text(r));
  return r.ok ? kPass : kFail;
}

int cmd_classify(int N, const CatalogOptions& co, const std::string& format, const Output& out) {
  auto cs = enumerate_catalog(N, co);
  out.write(format == "json" ? catalog_json(N, cs, co) : catalog_text(N, cs, co));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Cayley-Klein orthogonal groups in a Cartesian basis"};
  app.require_subcommand(1);

  std::string spec_arg, format = "text", out_path, perturb;
  std::uint64_t seed = 1;
  int points = 3, N = 3;
  bool shadow = false, relaxed = false, no_elim = false, no_conj = false;
  std::string subset, nilpotent, j_override;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--out", out_path, "write output to a file");
  };
  auto add_points = [&](CLI::App* c) {
    c->add_option("--seed", seed, "seed for evaluation points");
    c->add_option("--points", points, "number of evaluation points")->check(CLI::Range(1, 64));
  };

  auto* describe = app.add_subcommand("describe", "generating matrix, rho, J and pattern");
  describe->add_option("--spec", spec_arg, "spec JSON file or inline JSON")->required();
  add_common(describe);

  auto* verify = app.add_subcommand("verify", "run all checks for a spec");
  verify->add_option("--spec", spec_arg, "spec JSON file or inline JSON")->required();
  add_common(verify);
  add_points(verify);
  verify->add_option("--perturb-rtilde", perturb)->group("");

  auto* contract = app.add_subcommand("contract", "contract a spec with nilpotent parameters");
  contract->add_option("--spec", spec_arg, "spec JSON file or inline JSON")->required();
  contract->add_flag("--no-eliminate", no_elim, "skip generator elimination");
  contract->add_option("--J", j_override, "override J by a list of parameter indices (empty list: J = 1)");
  add_common(contract);
  add_points(contract);

  auto* classify = app.add_subcommand("classify", "catalog of nonisomorphic contractions");
  classify->add_option("--n", N, "dimension N (3..6)")->required();
  classify->add_flag("--shadow", shadow, "ignore J (classical groups)");
  classify->add_flag("--relaxed", relaxed, "allow relabeling without reflection");
  classify->add_option("--subset", subset, "only nilpotent sets inside this list, e.g. 1,2");
  classify->add_option("--nilpotent", nilpotent, "only this nilpotent set, e.g. 1,2,3,4");
  classify->add_flag("--no-conjugacy", no_conj, "skip the conjugacy check");
  add_common(classify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    Output out{out_path};
    if (*describe) return cmd_describe(load_spec(spec_arg), format, out);
    if (*verify) {
      VerifyOptions vo;
      vo.seed = seed;
      vo.points = points;
      if (!perturb.empty()) {
        std::stringstream ss(perturb);
        int r = 0, c = 0;
        char comma = 0;
        if (!(ss >> r >> comma >> c) || comma != ',') throw InputError("--perturb-rtilde expects row,col");
        vo.perturb_rtilde = std::make_pair(r, c);
      }
      return cmd_verify(load_spec(spec_arg), vo, format, out);
    }
    if (*contract) {
      GroupSpec g = load_spec(spec_arg);
      ContractOptions co;
      co.seed = seed;
      co.points = points;
      co.eliminate = !no_elim;
      if (contract->count("--J")) {
        ParamMonomial J(g.nparams());
        if (!j_override.empty())
          for (int k : indices(parse_indices(j_override))) {
            if (k < 1 || k > g.nparams()) throw InputError("--J index out of range");
            J.set(k, 1);
          }
        co.J_override = J;
      }
      return cmd_contract(g, co, format, out);
    }
    if (*classify) {
      CatalogOptions co;
      co.key.shadow = shadow;
      co.key.relaxed = relaxed;
      co.check_conjugacy = !no_conj;
      if (!subset.empty()) co.subset = parse_indices(subset);
      if (!nilpotent.empty()) co.exact = parse_indices(nilpotent);
      return cmd_classify(N, co, format, out);
    }
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const TransformError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}

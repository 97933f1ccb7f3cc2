// Command-line front end: check algebra definition files, browse and verify
// the family catalog, and work with the matrix algebra r_p.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "contactlie/algfile.hpp"
#include "contactlie/errata.hpp"
#include "contactlie/rp.hpp"

using namespace contactlie;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw FileFormatError("cannot write file: " + out_path);
  out << content;
}

std::map<std::string, std::string> parse_sets(const std::vector<std::string>& sets) {
  std::map<std::string, std::string> bindings;
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw FileFormatError("--set expects name=expr, got: " + s);
    bindings[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return bindings;
}

int run_check(const std::string& path, std::vector<std::string> checks,
              const std::string& out_path) {
  LoadedAlgebra loaded = load_algebra(parse_algebra_file(read_file(path)));
  const LieAlgebra& g = loaded.algebra;
  if (checks.empty()) checks = {"jacobi", "contact", "darboux", "compat", "f"};
  nlohmann::json results = nlohmann::json::array();
  bool all_ok = true;
  auto push = [&](const std::string& name, bool ok, const std::string& detail) {
    nlohmann::json r;
    r["name"] = name;
    r["status"] = ok ? "ok" : "fail";
    r["detail"] = detail;
    results.push_back(r);
    all_ok = all_ok && ok;
    std::cout << name << ": " << (ok ? "ok" : "FAIL");
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
  };
  for (const auto& name : checks) {
    if (name == "jacobi") {
      JacobiReport r = check_jacobi(g.bracket());
      std::string detail;
      if (!r.ok) {
        std::ostringstream msg;
        msg << "violated at (" << r.violations[0].i << "," << r.violations[0].j << ","
            << r.violations[0].k << ")";
        detail = msg.str();
      }
      push("jacobi", r.ok, detail);
    } else if (name == "contact") {
      if (g.dim() % 2 == 0) {
        push("contact", false, "even dimension");
        continue;
      }
      Scalar c =
          contact_coefficient(g, KForm::dual_basis(loaded.contact_form_index, g.dim(), loaded.ctx));
      push("contact", !c.is_zero(),
           c.is_zero() ? "coefficient vanishes" : "coefficient " + c.to_string());
    } else if (name == "darboux") {
      if (g.dim() % 2 == 0) {
        push("darboux", false, "even dimension");
        continue;
      }
      push("darboux", is_darboux(g, loaded.contact_form_index), "");
    } else if (name == "compat") {
      if (loaded.phi2) {
        // pair query: does a phi1 exist completing (bracket, phi2)?
        Phi1SearchResult r = find_phi1_obstruction(g.bracket(), *loaded.phi2);
        if (r.status == Phi1SearchResult::Status::no_solution)
          push("compat", false, "no phi1 cocycle exists: " + r.certificate);
        else if (r.status == Phi1SearchResult::Status::solvable)
          push("compat", true,
               "2-compatible; common cocycle space has dimension " +
                   std::to_string(r.cocycle_space_dim));
        else
          push("compat", false, "quadratic stage undecided at the linear level");
      } else {
        if (g.dim() % 2 == 0 || !is_darboux(g, 1)) {
          push("compat", false, "needs a Darboux table or an explicit phi2 block");
          continue;
        }
        ContactDecomposition dec = decompose_contact(g);
        FullSystemReport fs = verify_full_system(dec.parts);
        push("compat", fs.ok, fs.ok ? "" : "graded identities fail");
      }
    } else if (name == "f") {
      if (g.dim() % 2 == 0 || !is_darboux(g, 1)) {
        push("f", false, "needs a Darboux table");
        continue;
      }
      ContactDecomposition dec = decompose_contact(g);
      bool member = check_f_membership(dec.f, dec.p);
      bool deriv =
          coboundary1(dec.parts.phi1, extend_by_zero(dec.f, dec.dim, loaded.ctx)).is_zero();
      push("f", member && deriv,
           std::string(member ? "" : "not in r_p; ") + (deriv ? "" : "not a derivation of phi1"));
    } else {
      throw FileFormatError("unknown check: " + name);
    }
  }
  if (!out_path.empty()) write_output(out_path, results.dump(2) + "\n");
  return all_ok ? kExitOk : kExitCheckFailed;
}

int run_family_list() {
  for (const auto& f : catalog()) {
    std::cout << f.id;
    if (f.generic_p)
      std::cout << "  (generic, p >= " << f.min_p << ")";
    else
      std::cout << "  (dim " << f.build(0).dim << ")";
    std::cout << "  -- " << f.summary << "\n";
  }
  std::cout << catalog().size() << " families\n";
  return kExitOk;
}

int run_family_emit(const std::string& id, std::optional<int> p,
                    const std::map<std::string, std::string>& bindings,
                    const std::string& out_path) {
  if (!find_family(id)) throw FileFormatError("unknown family id: " + id);
  FamilyInstance inst = instantiate(id, p, bindings);
  write_output(out_path, serialize_algebra_file(to_algebra_file(inst)));
  return kExitOk;
}

int run_family_verify(const std::string& id, bool all, std::optional<int> p,
                      const std::string& mode, std::uint64_t seed, const std::string& out_path) {
  std::vector<std::string> ids;
  if (all) {
    for (const auto& f : catalog()) ids.push_back(f.id);
  } else {
    if (!find_family(id)) throw FileFormatError("unknown family id: " + id);
    ids.push_back(id);
  }
  bool ok = true;
  std::string structured;
  for (const auto& fid : ids) {
    VerificationReport rep = verify_family(fid, all ? std::nullopt : p, mode, seed);
    std::cout << report_to_text(rep);
    structured += report_to_json(rep);
    ok = ok && rep.ok();
  }
  if (!out_path.empty()) write_output(out_path, structured);
  std::cout << (ok ? "all families pass" : "some family failed") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int run_rp_basis(int p, const std::string& out_path) {
  auto ctx = ScalarContext::make();
  GradedBasis basis = rp_basis(p, ctx);
  std::ostringstream out;
  out << "dim r_" << p << " = " << basis.total() << " (h: " << basis.h.size() << ")\n";
  auto print_matrix = [&](const Endo& e) {
    for (int i = 1; i <= e.dim; ++i) {
      out << "  [";
      for (int j = 1; j <= e.dim; ++j) {
        if (j > 1) out << " ";
        out << e.at(i, j).to_string();
      }
      out << "]\n";
    }
  };
  for (std::size_t t = 0; t < basis.h.size(); ++t) {
    out << "h[" << t << "]\n";
    print_matrix(basis.h[t]);
  }
  for (const auto& [label, elems] : basis.m) {
    for (std::size_t t = 0; t < elems.size(); ++t) {
      out << "m" << label_to_string(label) << "[" << t << "]\n";
      print_matrix(elems[t]);
    }
  }
  write_output(out_path, out.str());
  return kExitOk;
}

int run_rp_grading(int p) {
  GradingReport r = check_grading(p);
  std::cout << "pairs checked: " << r.pairs_checked << "\n";
  if (r.ok) {
    std::cout << "grading ok: every commutator lands in the predicted component\n";
    return kExitOk;
  }
  for (const auto& leak : r.leaks)
    std::cout << "leak: [" << leak.lhs << ", " << leak.rhs << "] predicted " << leak.predicted
              << " observed " << leak.observed << "\n";
  return kExitCheckFailed;
}

int run_rp_check(int p, const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& err) {
    throw FileFormatError(std::string("JSON parse error: ") + err.what());
  }
  if (!doc.contains("entries")) throw FileFormatError("matrix file needs field: entries");
  const auto& entries = doc.at("entries");
  if (int(entries.size()) != 2 * p) throw FileFormatError("matrix must be 2p x 2p");
  auto ctx = ScalarContext::make();
  Endo a(2 * p, ctx);
  for (int i = 0; i < 2 * p; ++i) {
    if (int(entries[std::size_t(i)].size()) != 2 * p)
      throw FileFormatError("matrix must be 2p x 2p");
    for (int j = 0; j < 2 * p; ++j)
      a.at(i + 1, j + 1) =
          parse_scalar(entries[std::size_t(i)][std::size_t(j)].get<std::string>(), ctx);
  }
  if (is_in_rp(a, p)) {
    std::cout << "matrix is in r_" << p << "\n";
    return kExitOk;
  }
  std::cout << "not in r_" << p << "\n";
  BlockReport br = check_block_shape(a, p);
  for (const auto& [block, trace] : br.nonzero_traces)
    std::cout << "  diagonal block " << block << " has trace " << trace.to_string() << "\n";
  for (const auto& [pos, defect] : br.tilde_defects)
    std::cout << "  block (" << pos.first << "," << pos.second
              << ") is not the tilde of its mirror\n";
  return kExitCheckFailed;
}

int run_decompose(const std::string& path, const std::string& out_path) {
  LoadedAlgebra loaded = load_algebra(parse_algebra_file(read_file(path)));
  ContactDecomposition dec = decompose_contact(loaded.algebra);
  std::ostringstream out;
  out << "p = " << dec.p << "\n";
  out << "mu0:\n" << dec.parts.mu0.to_string() << "\n";
  out << "phi1:\n" << dec.parts.phi1.to_string() << "\n";
  out << "phi2:\n" << dec.parts.phi2.to_string() << "\n";
  auto print_matrix = [&](const Endo& m) {
    for (int i = 1; i <= m.dim; ++i) {
      out << "  [";
      for (int j = 1; j <= m.dim; ++j) {
        if (j > 1) out << " ";
        out << m.at(i, j).to_string();
      }
      out << "]\n";
    }
  };
  out << "f (on e2..e" << 2 * dec.p + 1 << "):\n";
  print_matrix(dec.f);
  out << "f in r_p: " << (check_f_membership(dec.f, dec.p) ? "yes" : "no") << "\n";
  if (dec.f.is_numeric()) {
    auto [fs, fn] = jordan_chevalley(dec.f);
    out << "f_s (diagonalizable part):\n";
    print_matrix(fs);
    out << "f_n (nilpotent part):\n";
    print_matrix(fn);
  }
  FullSystemReport fs = verify_full_system(dec.parts);
  out << "graded system (EQ2..EQ5): " << (fs.ok ? "ok" : "FAIL") << "\n";
  write_output(out_path, out.str());
  return fs.ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for contact Lie algebras and quadratic deformations"};
  app.require_subcommand(1);

  std::string out_path;

  // check
  auto* check = app.add_subcommand("check", "run checks on an algebra definition file");
  std::string check_path;
  std::vector<std::string> check_names;
  check->add_option("file", check_path, "algebra JSON file")->required();
  check->add_option("--checks", check_names,
                    "subset of jacobi,contact,darboux,compat,f (default: all)")
      ->delimiter(',');
  check->add_option("--out", out_path, "write structured output to a file");

  // family
  auto* family = app.add_subcommand("family", "catalog of classified families");
  family->require_subcommand(1);
  auto* family_list = family->add_subcommand("list", "list the catalog");
  auto* family_emit = family->add_subcommand("emit", "write a family as an algebra file");
  auto* family_verify = family->add_subcommand("verify", "run the verification battery");
  std::string family_id;
  int p_value = 0;
  bool has_p = false;
  bool verify_all = false;
  std::string mode = "symbolic";
  std::uint64_t seed = 20240601;
  std::vector<std::string> sets;
  family_emit->add_option("id", family_id, "family id")->required();
  family_emit->add_option("-p", p_value, "pair count for generic families");
  family_emit->add_option("--set", sets, "bind a parameter, name=expr (repeatable)");
  family_emit->add_option("--out", out_path, "write the algebra file here");
  family_verify->add_option("id", family_id, "family id");
  family_verify->add_flag("--all", verify_all, "verify the whole catalog");
  family_verify->add_option("-p", p_value, "pair count for generic families");
  family_verify->add_option("--mode", mode, "symbolic | sampled")->capture_default_str();
  family_verify->add_option("--sample-seed", seed, "seed for sampled mode")
      ->capture_default_str();
  family_verify->add_option("--out", out_path, "write JSON reports here");

  // rp
  auto* rp = app.add_subcommand("rp", "the matrix Lie algebra r_p");
  rp->require_subcommand(1);
  auto* rp_basis_cmd = rp->add_subcommand("basis", "print the graded basis");
  auto* rp_grading_cmd = rp->add_subcommand("grading", "check the bracket grading");
  auto* rp_check_cmd = rp->add_subcommand("check", "test a matrix for membership");
  int rp_p = 0;
  std::string rp_matrix_path;
  rp_basis_cmd->add_option("-p", rp_p, "pair count")->required();
  rp_basis_cmd->add_option("--out", out_path, "write the basis listing here");
  rp_grading_cmd->add_option("-p", rp_p, "pair count")->required();
  rp_check_cmd->add_option("-p", rp_p, "pair count")->required();
  rp_check_cmd->add_option("file", rp_matrix_path, "matrix JSON file")->required();

  // decompose
  auto* decompose = app.add_subcommand("decompose", "decompose a Darboux table");
  std::string decompose_path;
  decompose->add_option("file", decompose_path, "algebra JSON file")->required();
  decompose->add_option("--out", out_path, "write the decomposition here");

  std::optional<int> p_opt;
  try {
    app.parse(argc, argv);
    for (auto* sub : {family_emit, family_verify}) {
      if (sub->count("-p")) has_p = true;
    }
    if (has_p) p_opt = p_value;

    if (*check) return run_check(check_path, check_names, out_path);
    if (*family_list) return run_family_list();
    if (*family_emit) return run_family_emit(family_id, p_opt, parse_sets(sets), out_path);
    if (*family_verify) {
      if (!verify_all && family_id.empty())
        throw FileFormatError("family verify needs an id or --all");
      if (mode != "symbolic" && mode != "sampled")
        throw FileFormatError("--mode must be symbolic or sampled");
      return run_family_verify(family_id, verify_all, p_opt, mode, seed, out_path);
    }
    if (*rp_basis_cmd) return run_rp_basis(rp_p, out_path);
    if (*rp_grading_cmd) return run_rp_grading(rp_p);
    if (*rp_check_cmd) return run_rp_check(rp_p, rp_matrix_path);
    if (*decompose) return run_decompose(decompose_path, out_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const FileFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ScalarParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ScalarError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

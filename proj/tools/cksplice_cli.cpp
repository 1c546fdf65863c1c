// Command-line front end for the matrix constructions, invariants and
// pairwise classification.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cksplice/cksplice.hpp"
#include "cksplice/report_json.hpp"

namespace {

using namespace cksplice;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string group_text(const FgAbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Integer& m : g.torsion()) {
    os << (first ? "" : " + ") << "Z/" << m;
    first = false;
  }
  if (g.free_rank() > 0) {
    os << (first ? "" : " + ") << "Z";
    if (g.free_rank() > 1) os << "^" << g.free_rank();
  }
  return os.str();
}

std::vector<std::size_t> parse_permutation(const std::string& text) {
  std::vector<std::size_t> perm;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("permutation: '" + item + "' is not an integer");
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size() || v <= 0) throw ParseError("permutation: '" + item + "' is not a positive integer");
    perm.push_back(static_cast<std::size_t>(v));
  }
  if (perm.empty()) throw ParseError("permutation: empty list");
  return perm;
}

void emit_matrix(const BinaryMatrix& m, const std::string& out_path) {
  if (out_path.empty()) {
    write_matrix(std::cout, m);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  write_matrix(out, m);
}

BinaryMatrix apply_op(const std::string& op, const BinaryMatrix& a) {
  if (op == "splice") return cuntz_splice(a);
  if (op == "expand") return ps_expansion(a);
  if (op == "bar") return bar_construction(a);
  if (op == "tilde") return tilde_construction(a);
  // transfer: the input must be bar(A) for some A of size N = size - 3.
  if (a.size() < 4) throw StructuralError("transfer: input is too small to be a bar construction");
  return primitive_transfer_bar_to_tilde(a, a.size() - 3);
}

void run_invariants(const BinaryMatrix& a, bool json) {
  const bool irreducible = is_irreducible(a);
  const bool permutation = is_permutation_matrix(a);
  const InvariantTriple t = invariant_triple_unchecked(a);
  const bool classifiable = irreducible && !permutation;
  if (json) {
    nlohmann::json j = to_json(t);
    j["det_one_minus"] = integer_json(t.det_one_minus);
    j["irreducible"] = irreducible;
    j["permutation"] = permutation;
    if (!classifiable) j["note"] = "outside the irreducible non-permutation domain";
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "group: " << group_text(t.group) << '\n'
            << "class: " << oriented_class(t) << '\n'
            << "det(1-A): " << t.det_one_minus << '\n'
            << "sign: " << t.sign << '\n'
            << "irreducible: " << yes_no(irreducible) << '\n'
            << "permutation: " << yes_no(permutation) << '\n';
  if (!classifiable) std::cout << "note: outside the irreducible non-permutation domain\n";
}

void run_zeta(const BinaryMatrix& a, std::size_t order, bool check) {
  const Polynomial p = char_denominator(a);
  std::cout << "det(1-zA):";
  for (int i = 0; i <= p.degree(); ++i) std::cout << ' ' << p.coefficient(static_cast<std::size_t>(i));
  std::cout << '\n';
  if (!check) return;
  const RationalSeries s = zeta_series(a, order);
  std::cout << "zeta series:";
  for (const Rational& c : s.coefficients()) std::cout << ' ' << c;
  std::cout << '\n' << "consistent: " << yes_no(s == RationalSeries::inverse_of(p, order)) << '\n';
}

void run_compare(const BinaryMatrix& a, const BinaryMatrix& b, const ClassifyOptions& opts, bool json) {
  const ClassificationReport r = compare(a, b, opts);
  if (json) {
    std::cout << to_json(r).dump(2) << '\n';
    return;
  }
  const std::pair<const char*, Verdict> fields[] = {
      {"stable_isomorphic", r.stable_isomorphic},
      {"isomorphic", r.isomorphic},
      {"coe", r.coe},
      {"flip_coe", r.flip_coe},
      {"flip_flow_equivalent", r.flip_flow_equivalent},
      {"flow_equivalent", r.flow_equivalent},
  };
  for (const auto& [name, v] : fields) {
    std::cout << name << ": " << to_string(v) << '\n';
    if (auto it = r.evidence.find(name); it != r.evidence.end()) {
      for (const std::string& line : it->second) std::cout << "  " << line << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cuntz splice, bar construction and classification invariants for 0/1 matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t max_group_order = 10000;
  std::uint64_t seed = 1;
  app.add_option("--max-group-order", max_group_order, "bound for the exhaustive pointed-isomorphism search")
      ->capture_default_str();
  app.add_option("--seed", seed, "random seed for sampling")->capture_default_str();

  std::string in_path;
  std::string out_path;
  std::string op;
  auto* transform = app.add_subcommand("transform", "apply a matrix construction");
  transform->add_option("--op", op, "construction")
      ->required()
      ->check(CLI::IsMember({"splice", "expand", "bar", "tilde", "transfer"}));
  transform->add_option("--in", in_path, "input matrix file")->required();
  transform->add_option("--out", out_path, "output file (default stdout)");

  bool json = false;
  auto* invariants = app.add_subcommand("invariants", "print G(A), u_A, det(1-A) and structure flags");
  invariants->add_option("--in", in_path, "input matrix file")->required();
  invariants->add_flag("--json", json, "JSON output");

  std::size_t order = kDefaultZetaOrder;
  auto* zeta = app.add_subcommand("zeta", "print det(1-zA) and optionally check the zeta series");
  zeta->add_option("--in", in_path, "input matrix file")->required();
  auto* order_opt = zeta->add_option("--order", order, "series order to check")->check(CLI::Range(1, 64));

  std::string a_path;
  std::string b_path;
  auto* cmp = app.add_subcommand("compare", "decide the equivalence relations between two matrices");
  cmp->add_option("--a", a_path, "first matrix file")->required();
  cmp->add_option("--b", b_path, "second matrix file")->required();
  cmp->add_flag("--json", json, "JSON output");

  std::string perm_text;
  auto* conjugate = app.add_subcommand("conjugate", "conjugate by a permutation matrix");
  conjugate->add_option("--in", in_path, "input matrix file")->required();
  conjugate->add_option("--perm", perm_text, "1-based image list, e.g. \"3,1,2\"")->required();

  std::size_t sample_size = 0;
  auto* sample = app.add_subcommand("sample", "print a random irreducible non-permutation matrix");
  sample->add_option("--size", sample_size, "matrix size")->required()->check(CLI::Range(2, 64));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*transform) {
      emit_matrix(apply_op(op, load_matrix(in_path)), out_path);
    } else if (*invariants) {
      run_invariants(load_matrix(in_path), json);
    } else if (*zeta) {
      run_zeta(load_matrix(in_path), order, order_opt->count() > 0);
    } else if (*cmp) {
      ClassifyOptions opts;
      opts.pointed.max_group_order = max_group_order;
      run_compare(load_matrix(a_path), load_matrix(b_path), opts, json);
    } else if (*conjugate) {
      const BinaryMatrix a = load_matrix(in_path);
      write_matrix(std::cout, permutation_conjugate(a, parse_permutation(perm_text)));
    } else if (*sample) {
      std::mt19937_64 rng(seed);
      write_matrix(std::cout, random_classifiable_matrix(sample_size, rng));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

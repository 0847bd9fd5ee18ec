#include "tpa/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "tpa/catalog.hpp"
#include "tpa/construct.hpp"
#include "tpa/io.hpp"
#include "tpa/search.hpp"
#include "tpa/solve.hpp"

namespace tpa {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraBundle load_bundle(const std::string& path) {
  return parse_algebra_file(read_file(path));
}

// Empty path means stdout.
void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw SchemaError("cannot write file '" + path + "'");
  f << text;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// A basis label, or dim comma-separated scalar literals.
Element element_arg(const AlgebraBundle& b, const std::string& text) {
  const int d = b.space.dim;
  for (int i = 0; i < d; ++i)
    if (b.space.labels[static_cast<std::size_t>(i)] == text)
      return basis_element(d, b.field, i);
  std::vector<std::string> parts = split_csv(text);
  if (static_cast<int>(parts.size()) != d)
    throw std::invalid_argument("element '" + text +
                                "': expected a basis label or " +
                                std::to_string(d) +
                                " comma-separated scalars");
  Element v = zero_element(d, b.field);
  for (int i = 0; i < d; ++i)
    v[static_cast<std::size_t>(i)] =
        Scalar::parse(parts[static_cast<std::size_t>(i)], b.field);
  return v;
}

// Bundle maps win over the literal "id"; unknown names keep the bundle's
// out-of-range diagnostics.
LinearMap map_arg(const AlgebraBundle& b, const std::string& name) {
  if (b.find_map(name)) return b.map(name);
  if (name == "id") return identity_map(b.space.dim, b.field);
  return b.map(name);
}

Field field_arg(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.rfind("gf:", 0) == 0) {
    const std::string num = text.substr(3);
    if (num.empty() || num.size() > 18 ||
        num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad field '" + text +
                                  "', expected Q or gf:p");
    return Field::gf(std::stoll(num));
  }
  throw std::invalid_argument("bad field '" + text + "', expected Q or gf:p");
}

std::vector<CatalogEntry> full_catalog() {
  std::vector<CatalogEntry> out = catalog_2d_transposed();
  std::vector<CatalogEntry> der = catalog_2d_derivation_induced();
  out.insert(out.end(), std::make_move_iterator(der.begin()),
             std::make_move_iterator(der.end()));
  out.push_back(prelie_poisson_2d_example());
  return out;
}

bool any_counterexample(const std::vector<SearchReport>& reports) {
  for (const SearchReport& r : reports)
    if (r.verdict == "counterexample-found") return true;
  return false;
}

bool all_hold(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports)
    if (!r.holds) return false;
  return true;
}

struct ConstructArgs {
  std::string kind;
  std::string file;
  std::string mul = "mul";
  std::string op;       // kind-specific default
  std::string bracket = "bracket";
  std::vector<std::string> maps;
  std::string h;
  std::string with;     // second factor file for tensor
  std::string op_b;     // second factor's paired op for tensor
  std::string as;       // rename the constructed op or map
  std::string out_path;
};

int run_construct(const ConstructArgs& a, std::ostream& out) {
  AlgebraBundle in = load_bundle(a.file);
  AlgebraBundle result = in;
  std::vector<CheckReport> attached;

  auto named_op = [&](const char* fallback) -> const MultiLinearOp& {
    return in.op(a.op.empty() ? fallback : a.op);
  };
  auto one_map = [&](const char* fallback) -> LinearMap {
    if (a.maps.size() > 1)
      throw std::invalid_argument("construct " + a.kind +
                                  ": expects at most one --map");
    return map_arg(in, a.maps.empty() ? fallback : a.maps[0]);
  };
  auto required_h = [&]() -> Element {
    if (a.h.empty())
      throw std::invalid_argument("construct " + a.kind +
                                  ": --h is required");
    return element_arg(in, a.h);
  };
  auto add_result_op = [&](MultiLinearOp op) {
    if (!a.as.empty()) op.name = a.as;
    result.add_op(std::move(op));
  };

  if (a.kind == "commutator") {
    add_result_op(commutator_bracket(named_op("circ")));
  } else if (a.kind == "gelfand") {
    add_result_op(gelfand_product(in.op(a.mul), one_map("D")));
  } else if (a.kind == "derivation-bracket") {
    add_result_op(derivation_bracket(in.op(a.mul), one_map("D")));
  } else if (a.kind == "two-derivation-bracket") {
    if (a.maps.size() != 2)
      throw std::invalid_argument(
          "construct two-derivation-bracket: expects exactly two --map "
          "names");
    add_result_op(two_derivation_bracket(in.op(a.mul), map_arg(in, a.maps[0]),
                                         map_arg(in, a.maps[1])));
  } else if (a.kind == "rescale") {
    MultiLinearOp op =
        rescaled_bracket(in.op(a.mul), in.op(a.bracket), required_h());
    op.name = a.as.empty() ? "rescaled" : a.as;
    result.add_op(std::move(op));
  } else if (a.kind == "hom-lie") {
    HomLieResult r =
        hom_lie_structure(in.op(a.mul), in.op(a.bracket), required_h());
    if (!a.as.empty()) r.phi.name = a.as;
    result.add_map(r.phi);
    attached.push_back(r.hom_jacobi);
    attached.push_back(r.varphi2);
    if (r.multiplicativity) attached.push_back(*r.multiplicativity);
  } else if (a.kind == "tensor") {
    AlgebraBundle other = a.with.empty() ? in : load_bundle(a.with);
    const std::string opa = a.op.empty() ? "bracket" : a.op;
    const std::string opb = a.op_b.empty() ? opa : a.op_b;
    result = tensor_mixed(in, opa, other, opb);
  } else if (a.kind == "3lie-derivation") {
    add_result_op(
        three_lie_from_derivation(in.op(a.mul), in.op(a.bracket),
                                  one_map("D")));
  } else if (a.kind == "3lie-involution") {
    InvolutionThreeLie r = three_lie_from_involution(
        in.op(a.mul), in.op(a.bracket), one_map("f"));
    add_result_op(std::move(r.op));
    attached.push_back(r.const3_extra);
    if (r.transposed_3lie) attached.push_back(*r.transposed_3lie);
  } else if (a.kind == "3lie-poisson") {
    add_result_op(three_lie_from_poisson(in.op(a.mul), in.op(a.bracket)));
  } else if (a.kind == "ladder-step") {
    add_result_op(nlie_ladder_step(in.op(a.mul),
                                   named_op("tri"), one_map("D")));
  } else if (a.kind == "wedge") {
    if (a.maps.empty())
      throw std::invalid_argument(
          "construct wedge: at least one --map is required ('id' is "
          "accepted)");
    std::vector<LinearMap> maps;
    maps.reserve(a.maps.size());
    for (const std::string& name : a.maps) maps.push_back(map_arg(in, name));
    add_result_op(wedge_bracket(maps, in.op(a.mul)));
  } else {
    throw std::invalid_argument("unknown construct kind '" + a.kind + "'");
  }

  const bool failed = !all_hold(attached);
  const std::string subject = "construct " + a.kind + " " + a.file;
  const std::string bundle_text = emit_algebra_file(result);
  if (!a.out_path.empty()) {
    write_text(a.out_path, bundle_text, out);
    if (!attached.empty()) out << emit_report(subject, attached);
  } else if (failed) {
    out << emit_report(subject, attached);
  } else {
    out << bundle_text;
  }
  return failed ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact structure constants: verify, solve, construct, search",
               "tpa"};
  app.require_subcommand(1);

  // check
  std::string chk_file, chk_profile, chk_axiom;
  std::vector<std::string> chk_binds;
  CLI::App* check = app.add_subcommand(
      "check", "verify a named profile or a single identity");
  check->add_option("file", chk_file, "algebra file")->required();
  check->add_option("--profile", chk_profile, "profile name");
  check->add_option("--axiom", chk_axiom, "identity name");
  check->add_option("--bind", chk_binds, "role=name binding (repeatable)");

  // derivations
  std::string der_file, der_ops, der_comm;
  CLI::App* derivs = app.add_subcommand(
      "derivations", "joint derivation space of the listed ops");
  derivs->add_option("file", der_file, "algebra file")->required();
  derivs->add_option("--ops", der_ops, "comma-separated op names")
      ->required();
  derivs->add_option("--commuting-with", der_comm,
                     "restrict to maps commuting with this map");

  // solve compatible-products
  std::string scp_file, scp_bracket = "bracket", scp_rule;
  CLI::App* solve = app.add_subcommand("solve", "linear solution spaces");
  solve->require_subcommand(1);
  CLI::App* scp = solve->add_subcommand(
      "compatible-products",
      "commutative products compatible with a fixed bracket");
  scp->add_option("file", scp_file, "algebra file")->required();
  scp->add_option("--bracket", scp_bracket, "bracket op name");
  scp->add_option("--rule", scp_rule, "transposed | leibniz")->required();

  // construct
  ConstructArgs ca;
  CLI::App* construct = app.add_subcommand(
      "construct", "derive a new op or map and emit the extended bundle");
  construct->set_help_flag("--help", "print help");  // frees -h for --h
  construct->add_option("kind", ca.kind,
                        "commutator | gelfand | derivation-bracket | "
                        "two-derivation-bracket | rescale | hom-lie | tensor "
                        "| 3lie-derivation | 3lie-involution | 3lie-poisson "
                        "| ladder-step | wedge")
      ->required();
  construct->add_option("file", ca.file, "algebra file")->required();
  construct->add_option("--mul", ca.mul, "commutative product name");
  construct->add_option("--op", ca.op,
                        "kind-specific op: the product to commutate, the "
                        "paired tensor op, or the n-ary op to extend");
  construct->add_option("--bracket", ca.bracket, "bracket op name");
  construct->add_option("--map", ca.maps,
                        "map name, repeatable; 'id' is the identity");
  construct->add_option("--h", ca.h,
                        "element: basis label or comma-separated scalars");
  construct->add_option("--with", ca.with, "second factor file (tensor)");
  construct->add_option("--op-b", ca.op_b, "second factor's op (tensor)");
  construct->add_option("--as", ca.as, "name for the constructed op or map");
  construct->add_option("--out", ca.out_path, "write the bundle here");

  // tensor
  std::string t_file_a, t_file_b, t_op_a = "bracket", t_op_b, t_out;
  CLI::App* tensor =
      app.add_subcommand("tensor", "tensor product of two bundles");
  tensor->add_option("fileA", t_file_a, "first factor")->required();
  tensor->add_option("fileB", t_file_b, "second factor")->required();
  tensor->add_option("--op-a", t_op_a, "paired op in the first factor");
  tensor->add_option("--op-b", t_op_b, "paired op in the second factor");
  tensor->add_option("--out", t_out, "write the bundle here");

  // ladder
  std::string lad_file, lad_op = "bracket", lad_map = "D";
  int lad_levels = 1;
  CLI::App* ladder = app.add_subcommand(
      "ladder", "extend the n-ary bracket level by level and re-check");
  ladder->add_option("file", lad_file, "algebra file")->required();
  ladder->add_option("--levels", lad_levels, "levels to climb")->required();
  ladder->add_option("--op", lad_op, "n-ary bracket name");
  ladder->add_option("--map", lad_map, "derivation name");

  // fuzz
  std::string fz_target, fz_field = "gf:5";
  int fz_dim = 3, fz_count = 20, fz_levels = 1;
  std::uint64_t fz_seed = 0;
  CLI::App* fuzz =
      app.add_subcommand("fuzz", "seeded searches over generated instances");
  fuzz->add_option("--target", fz_target, "antimorphisms | ladder")
      ->required();
  fuzz->add_option("--field", fz_field, "Q or gf:p");
  fuzz->add_option("--dim", fz_dim,
                   "dimension bound (antimorphisms) or truncation order "
                   "(ladder)");
  fuzz->add_option("--seed", fz_seed, "PRNG seed");
  fuzz->add_option("--count", fz_count, "instances to draw (ladder)");
  fuzz->add_option("--levels", fz_levels, "ladder levels per instance");

  // catalog
  std::string cat_id, cat_out;
  CLI::App* catalog =
      app.add_subcommand("catalog", "built-in example algebras");
  catalog->require_subcommand(1);
  CLI::App* cat_list =
      catalog->add_subcommand("list", "one line per entry: id, dim, profiles");
  CLI::App* cat_emit =
      catalog->add_subcommand("emit", "emit one entry as an algebra file");
  cat_emit->add_option("id", cat_id, "entry id")->required();
  cat_emit->add_option("--out", cat_out, "write the bundle here");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string subject;
  try {
    if (check->parsed()) {
      if (chk_profile.empty() == chk_axiom.empty())
        throw std::invalid_argument(
            "check: exactly one of --profile or --axiom is required");
      subject = chk_file;
      AlgebraBundle b = load_bundle(chk_file);
      Binding bind = Binding::parse(chk_binds);
      std::vector<CheckReport> reports;
      if (chk_profile.empty())
        reports.push_back(
            check_identity(b, axiom_from_name(chk_axiom), bind));
      else
        reports = check_profile(b, chk_profile, bind);
      out << emit_report(chk_file, reports);
      return all_hold(reports) ? 0 : 1;
    }

    if (derivs->parsed()) {
      subject = der_file;
      AlgebraBundle b = load_bundle(der_file);
      std::optional<LinearMap> comm;
      if (!der_comm.empty()) comm = b.map(der_comm);
      SolutionSpace s =
          joint_derivation_space(b, split_csv(der_ops), comm);
      out << emit_solution_space(der_file, s);
      return 0;
    }

    if (scp->parsed()) {
      subject = scp_file;
      AlgebraBundle b = load_bundle(scp_file);
      SolutionSpace s = compatible_symmetric_products(
          b.op(scp_bracket), compat_rule_from_name(scp_rule));
      out << emit_solution_space(scp_file, s);
      return 0;
    }

    if (construct->parsed()) {
      subject = "construct " + ca.kind + " " + ca.file;
      return run_construct(ca, out);
    }

    if (tensor->parsed()) {
      subject = t_file_a + " (x) " + t_file_b;
      AlgebraBundle a = load_bundle(t_file_a);
      AlgebraBundle b = load_bundle(t_file_b);
      AlgebraBundle r = tensor_mixed(a, t_op_a, b,
                                     t_op_b.empty() ? t_op_a : t_op_b);
      write_text(t_out, emit_algebra_file(r), out);
      return 0;
    }

    if (ladder->parsed()) {
      subject = lad_file;
      AlgebraBundle b = load_bundle(lad_file);
      SearchReport r =
          test_conjecture_ladder(b, lad_levels, "mul", lad_op, lad_map);
      out << emit_report(lad_file, {}, {r});
      return r.verdict == "counterexample-found" ? 1 : 0;
    }

    if (fuzz->parsed()) {
      subject = "fuzz " + fz_target;
      const Field f = field_arg(fz_field);
      std::vector<SearchReport> reports;
      if (fz_target == "antimorphisms") {
        EnumBudget budget;
        budget.max_dim = fz_dim;
        for (const CatalogEntry& e : catalog_2d_transposed(f)) {
          if (e.bundle.space.dim > fz_dim) continue;
          SearchReport r = find_involutive_antimorphisms(e.bundle, budget);
          r.target += " " + e.id;
          r.seed = fz_seed;
          reports.push_back(std::move(r));
        }
      } else if (fz_target == "ladder") {
        if (fz_dim < 2)
          throw std::invalid_argument("fuzz ladder: --dim must be >= 2");
        GeneratorSpec spec;
        spec.kind = "truncated-poly";
        spec.field = f;
        spec.caps = {fz_dim};
        spec.count = fz_count;
        std::vector<AlgebraBundle> instances =
            sample_tpa_instances(spec, fz_seed);
        for (std::size_t i = 0; i < instances.size(); ++i) {
          SearchReport r = test_conjecture_ladder(instances[i], fz_levels);
          r.target += " instance " + std::to_string(i);
          r.seed = fz_seed;
          reports.push_back(std::move(r));
        }
      } else {
        throw std::invalid_argument("unknown fuzz target '" + fz_target +
                                    "', expected antimorphisms or ladder");
      }
      out << emit_report(subject + " " + fz_field, {}, reports);
      return any_counterexample(reports) ? 1 : 0;
    }

    if (cat_list->parsed()) {
      for (const CatalogEntry& e : full_catalog()) {
        out << std::left << std::setw(18) << e.id << " dim "
            << e.bundle.space.dim << "  "
            << (e.claimed_profiles.empty()
                    ? "-"
                    : join(e.claimed_profiles, ", "))
            << "\n";
      }
      return 0;
    }

    if (cat_emit->parsed()) {
      subject = "catalog emit " + cat_id;
      for (const CatalogEntry& e : full_catalog()) {
        if (e.id != cat_id) continue;
        AlgebraBundle b = e.bundle;
        b.metadata["catalog-id"] = e.id;
        if (!e.claimed_profiles.empty())
          b.metadata["claimed-profiles"] = join(e.claimed_profiles, ",");
        if (!e.note.empty()) b.metadata["note"] = e.note;
        for (const auto& [k, v] : e.parameters)
          b.metadata["param:" + k] = v.str();
        write_text(cat_out, emit_algebra_file(b), out);
        return 0;
      }
      throw std::invalid_argument("unknown catalog entry '" + cat_id + "'");
    }

    err << "error: no subcommand selected\n";
    return 2;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    out << emit_report(subject, e.reports());
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace tpa

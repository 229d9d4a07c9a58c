#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "dsign/equadratic.hpp"
#include "dsign/error.hpp"
#include "dsign/generators.hpp"
#include "dsign/io.hpp"
#include "dsign/verify.hpp"

namespace dsign::cli {
namespace {

namespace fs = std::filesystem;
using io::json;

struct Globals {
  double tol = kDefaultTol;
  int samples = 1000;
  std::uint64_t seed = 0;
  bool json = false;
};

std::string mat_text(const Mat& m) {
  static const Eigen::IOFormat fmt(Eigen::FullPrecision, 0, " ", "\n", "  [", "]");
  std::ostringstream os;
  os << (m.array() + 0.0).matrix().format(fmt);  // + 0.0 turns -0 into 0
  return os.str();
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::SignInconsistent:
    case ErrorKind::NotDivision:
    case ErrorKind::NotEQuadratic:
    case ErrorKind::NonUniqueIdempotent:
    case ErrorKind::BlockMismatch:
      return kCheckFailed;
    default:
      return is_numerical(k) ? kNumerical : kBadInput;
  }
}

Algebra load_algebra(const std::string& path) { return io::algebra_from_json(io::read_file(path)); }

void emit_algebra(const Algebra& a, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << io::to_json(a).dump(2) << "\n";
  else
    io::write_file(out_path, io::to_json(a));
}

json group_list(const std::vector<GroupElement2D>& els) {
  json arr = json::array();
  for (const auto& g : els)
    arr.push_back({{"group", std::string(to_string(g.group))}, {"name", g.name}, {"matrix", io::matrix_to_json(g.matrix)}});
  return arr;
}

std::string quat_text(const Quaternion& q) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << q[0] << ", " << q[1] << ", " << q[2] << ", " << q[3] << ")";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real division algebras: double sign, isotopes, functors and normal forms", "dsign"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "Numerical tolerance")->capture_default_str();
  app.add_option("--samples", g.samples, "Random sample count")->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_flag("--json", g.json, "Write JSON instead of text");

  // Each subcommand sets `action`; it runs after parsing succeeds and returns the exit code.
  std::function<int()> action;
  auto sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  std::string file, file2, out_path, mode, kind = "classical";
  int count = 1;

  auto* sp = sub("sign-pair", "Double sign of an algebra");
  sp->add_option("algebra", file, "Algebra JSON")->required();
  sp->callback([&] {
    action = [&] {
      const SignPair p = sign_pair(load_algebra(file), {g.samples, g.tol, g.seed});
      if (g.json)
        out << json{{"ell", std::string(1, to_char(p.ell))}, {"r", std::string(1, to_char(p.r))}, {"block", p.label()}}.dump()
            << "\n";
      else
        out << p.label() << "\n";
      return kOk;
    };
  });

  auto* bl = sub("block", "Block label of an algebra");
  bl->add_option("algebra", file, "Algebra JSON")->required();
  bl->callback([&] {
    action = [&] {
      const std::string b = block_of(load_algebra(file), {g.samples, g.tol, g.seed});
      out << (g.json ? json{{"block", b}}.dump() : b) << "\n";
      return kOk;
    };
  });

  auto* is = sub("isotope", "Isotope x o y = (S x)(T y)");
  is->add_option("algebra", file, "Algebra JSON")->required();
  is->add_option("pair", file2, "Matrix pair JSON {\"S\", \"T\"}")->required();
  is->add_option("-o,--output", out_path, "Output file (default: standard output)");
  is->callback([&] {
    action = [&] {
      const io::MatrixPair p = io::pair_from_json(io::read_file(file2));
      emit_algebra(isotope(load_algebra(file), p.s, p.t, g.tol), out_path, out);
      return kOk;
    };
  });

  auto* op = sub("opposite", "Opposite algebra");
  op->add_option("algebra", file, "Algebra JSON")->required();
  op->add_option("-o,--output", out_path, "Output file (default: standard output)");
  op->callback([&] {
    action = [&] {
      emit_algebra(opposite(load_algebra(file)), out_path, out);
      return kOk;
    };
  });

  auto* dc = sub("divcheck", "Division test");
  dc->add_option("algebra", file, "Algebra JSON")->required();
  dc->add_option("--mode", mode, "exact2d or sampled (default: exact2d up to dim 2)")
      ->check(CLI::IsMember({"exact2d", "sampled"}));
  dc->callback([&] {
    action = [&] {
      const Algebra a = load_algebra(file);
      const std::string m = mode.empty() ? (a.dim() <= 2 ? "exact2d" : "sampled") : mode;
      const DivisionReport r =
          is_division(a, m == "exact2d" ? DivisionMode::Exact2d : DivisionMode::Sampled, g.samples, g.tol, g.seed);
      if (g.json)
        out << json{{"mode", m}, {"verdict", std::string(to_string(r.verdict))}, {"margin", r.margin}}.dump() << "\n";
      else
        out << to_string(r.verdict) << " (mode " << m << ", margin " << r.margin << ")\n";
      return r.verdict == DivisionVerdict::NotDivision ? kCheckFailed : kOk;
    };
  });

  auto* eq = sub("equad", "e-quadratic structure: e, Im_e basis and block");
  eq->add_option("algebra", file, "Algebra JSON")->required();
  eq->callback([&] {
    action = [&] {
      const Algebra a = load_algebra(file);
      const EQuadStructure s = equadratic_structure(a, g.tol);
      const std::string b = block_of(a, {g.samples, g.tol, g.seed});
      if (g.json)
        out << json{{"e", io::vector_to_json(s.e)}, {"im_basis", io::matrix_to_json(s.im_basis)}, {"unique", true}, {"block", b}}
                   .dump(2)
            << "\n";
      else
        out << "e:\n" << mat_text(s.e.transpose()) << "\nIm_e basis (columns):\n" << mat_text(s.im_basis)
            << "\nunique: yes\nblock: " << b << "\n";
      return kOk;
    };
  });

  auto* c2 = sub("classify2d", "Normal form of a 2-d division algebra");
  c2->add_option("algebra", file, "Algebra JSON")->required();
  c2->callback([&] {
    action = [&] {
      const Classified2D c = normal_form_2d(load_algebra(file), g.tol);
      if (g.json) {
        json j = io::to_json(c.nf);
        j["iso"] = io::matrix_to_json(c.iso);
        j["residual"] = c.residual;
        out << j.dump(2) << "\n";
      } else {
        out << "block: " << c.nf.block().label() << "  (i, j) = (" << c.nf.i << ", " << c.nf.j << ")\nA:\n"
            << mat_text(c.nf.a) << "\nB:\n" << mat_text(c.nf.b) << "\nisomorphism:\n" << mat_text(c.iso)
            << "\nresidual: " << c.residual << "\n";
      }
      return kOk;
    };
  });

  auto* h2 = sub("hom2d", "Morphisms between two 2-d normal forms");
  h2->add_option("src", file, "Normal form JSON")->required();
  h2->add_option("dst", file2, "Normal form JSON")->required();
  h2->callback([&] {
    action = [&] {
      const auto homs = hom2d(io::normal_form_from_json(io::read_file(file)),
                              io::normal_form_from_json(io::read_file(file2)), g.tol);
      if (g.json) {
        out << json{{"count", homs.size()}, {"morphisms", group_list(homs)}}.dump(2) << "\n";
      } else {
        out << homs.size() << " morphism(s)\n";
        for (const auto& e : homs) out << e.name << ":\n" << mat_text(e.matrix) << "\n";
      }
      return kOk;
    };
  });

  auto* qt = sub("quat", "Quaternion isotopes");
  qt->require_subcommand(1);
  auto* qn = qt->add_subcommand("normal-form", "Normal form of H_{S,T}");
  qn->fallthrough();
  qn->add_option("pair", file, "Matrix pair JSON {\"S\", \"T\"}")->required();
  qn->callback([&] {
    action = [&] {
      const io::MatrixPair p = io::pair_from_json(io::read_file(file));
      const QuatNormalForm q = quat_normal_form(p.s, p.t, g.tol);
      const std::string b{to_char(q.alpha), to_char(q.beta)};
      if (g.json) {
        out << json{{"block", b}, {"object", io::to_json(q.x)}, {"iso", io::matrix_to_json(q.iso)}, {"residual", q.residual}}
                   .dump(2)
            << "\n";
      } else {
        out << "block: " << b << "\na: " << quat_text(q.x.a) << "\nb: " << quat_text(q.x.b) << "\nC:\n"
            << mat_text(q.x.c) << "\nD:\n" << mat_text(q.x.d) << "\nisomorphism:\n" << mat_text(q.iso)
            << "\nresidual: " << q.residual << "\n";
      }
      return kOk;
    };
  });

  auto* gn = sub("gen", "Write sample algebras to files");
  gn->add_option("kind", kind, "classical, random2d, quat-isotope or oct-isotope")
      ->check(CLI::IsMember({"classical", "random2d", "quat-isotope", "oct-isotope"}))
      ->capture_default_str();
  gn->add_option("--count", count, "Number of algebras (random kinds)")->check(CLI::PositiveNumber);
  gn->add_option("--out", out_path, "Output directory")->required();
  gn->callback([&] {
    action = [&] {
      fs::create_directories(out_path);
      std::vector<fs::path> written;
      auto put = [&](const std::string& name, const Algebra& a) {
        const fs::path p = fs::path(out_path) / (name + ".json");
        io::write_file(p, io::to_json(a));
        written.push_back(p);
      };
      Rng rng(g.seed);
      if (kind == "classical") {
        put("C", classical(Classical::C));
        put("H", classical(Classical::H));
        put("O", classical(Classical::O));
      } else {
        for (int k = 0; k < count; ++k) {
          const std::string name = kind + "_" + std::to_string(k);
          if (kind == "random2d")
            put(name, random_2d_division(rng).relabel(name));
          else
            put(name, random_classical_isotope(kind == "quat-isotope" ? 4 : 8, rng).relabel(name));
        }
      }
      if (g.json) {
        json arr = json::array();
        for (const auto& p : written) arr.push_back(p.string());
        out << json{{"written", arr}}.dump() << "\n";
      } else {
        for (const auto& p : written) out << p.string() << "\n";
      }
      return kOk;
    };
  });

  auto* vf = sub("verify", "Run every invariant check");
  vf->callback([&] {
    action = [&] {
      std::string echo = "dsign";
      for (const auto& a : args) echo += " " + a;
      const Report r = run_verify({g.seed, g.samples, g.tol}, echo);
      out << (g.json ? to_json(r).dump(2) + "\n" : to_text(r));
      return r.passed() ? kOk : kCheckFailed;
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    return action ? action() : kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace dsign::cli

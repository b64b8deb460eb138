#include "reptile/cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>

#include "reptile/algebra/certified.hpp"
#include "reptile/audit/audit.hpp"
#include "reptile/fiedler/fiedler.hpp"
#include "reptile/hill/hill.hpp"
#include "reptile/io/json.hpp"
#include "reptile/io/obj.hpp"
#include "reptile/io/radical.hpp"
#include "reptile/trig/trig.hpp"

namespace reptile {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;

  std::string read(const std::string& path) const {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path);
    if (!file) throw InputError("cannot open \"" + path + "\"");
    std::stringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }

  Json read_json(const std::string& path) const { return parse_json_text(read(path)); }

  void write(const std::string& path, const std::function<void(std::ostream&)>& emit) const {
    if (path.empty() || path == "-") {
      emit(out);
      out.flush();
      return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot write \"" + path + "\"");
    emit(file);
  }

  void write_json(const std::string& path, const Json& j) const {
    write(path, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  }
};

CosMatrix cos_matrix_from_upper(int dim, const std::string& list) {
  std::vector<AlgebraicReal> upper;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) upper.push_back(parse_radical(item));
  const std::size_t expected = static_cast<std::size_t>(dim * (dim + 1) / 2);
  if (upper.size() != expected)
    throw InputError("--upper needs " + std::to_string(expected) + " comma-separated cosines for dim " + std::to_string(dim));
  CosMatrix m = CosMatrix::from_upper(dim, upper);
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return m;
}

HillSpec hill_spec(int dim, const std::string& cos) {
  if (cos.empty()) return HillSpec::orthonormal(dim);
  return HillSpec::from_cosine(dim, parse_radical(cos));
}

Json angle_json(const AlgebraicReal& x) {
  const auto angle = match_rational_angle(x);
  Json out{{"value", x.is_rational() ? rational_json(*x.rational()) : algebraic_json(x)},
           {"decimal", x.approx()},
           {"degree", x.degree()}};
  out["rational_angle"] = angle ? Json(angle->to_string()) : Json(nullptr);
  if (angle) out["degrees"] = angle->degrees();
  return out;
}

struct Cli {
  Io io;
  CLI::App app{"Exact tools for reptile simplices: realizability, Hill dissections, rational angles and the k-reptile audit",
               "reptile-forge"};
  std::function<int()> action;

  // shared option storage
  std::string input = "-", out_path, upper, cos, obj, json_path, step_id, value;
  int dim = 3, m = 2, generations = 1, degree = 2, sample_pairs = 100;
  std::int64_t kmax = 7, k = 2;
  std::uint64_t budget = 1u << 20;

  explicit Cli(Io io_) : io(io_) {
    app.require_subcommand(1);
    app.set_version_flag("--version", "reptile-forge 1.0");
    fiedler();
    hill();
    angles();
    audit();
    exporter();
  }

  CosMatrix cos_input() const { return upper.empty() ? cos_matrix_from_json(io.read_json(input)) : cos_matrix_from_upper(dim, upper); }

  void fiedler() {
    CLI::App* f = app.add_subcommand("fiedler", "Realizability of dihedral-angle cosine matrices");
    f->require_subcommand(1);
    for (const char* name : {"check", "reconstruct"}) {
      const bool check = std::string(name) == "check";
      CLI::App* c = f->add_subcommand(name, check ? "Decide realizability exactly; exit 1 when not realizable"
                                                  : "Build a simplex with the given dihedral cosines");
      CLI::Option* in = c->add_option("input", input, "cosine matrix JSON {\"dim\", \"cos\"}; - for stdin");
      CLI::Option* up = c->add_option("--upper", upper, "strict upper triangle as comma-separated exact values");
      in->excludes(up);
      c->add_option("--dim", dim, "dimension for --upper")->check(CLI::Range(1, 8));
      c->add_option("--out", out_path, "JSON output path (default stdout)");
      c->callback([this, check] {
        action = [this, check] {
          const CosMatrix a = cos_input();
          const RealizabilityVerdict v = realizability_check(a);
          if (check) {
            io.write_json(out_path, verdict_json(v));
            io.err << "fiedler check: " << (v.valid ? "realizable" : "not realizable (" + to_string(v.failure) + ")")
                   << ", " << v.field << " field\n";
            return v.valid ? kOk : kFailed;
          }
          if (!v.valid) {
            io.write_json(out_path, Json{{"verdict", verdict_json(v)}});
            io.err << "fiedler reconstruct: not realizable (" << to_string(v.failure) << ")\n";
            return kFailed;
          }
          const Simplex s = reconstruct_simplex(a);
          const double residual = cosine_residual(a, s);
          io.write_json(out_path, Json{{"verdict", verdict_json(v)}, {"simplex", simplex_json(s)}, {"cosine_residual", residual}});
          io.err << "fiedler reconstruct: ok, cosine residual " << residual << "\n";
          return kOk;
        };
      });
    }
  }

  void hill() {
    CLI::App* h = app.add_subcommand("hill", "Hill simplices and their reptile dissections");
    h->require_subcommand(1);
    auto spec_options = [this](CLI::App* c) {
      c->add_option("--dim", dim, "dimension (2 to 4 for --cos, any >= 2 otherwise)")->check(CLI::Range(2, 8));
      c->add_option("--cos", cos, "common cosine of the edge-vector angles, e.g. 1/2 or (sqrt(5)-1)/4");
    };

    CLI::App* g = h->add_subcommand("generate", "The Hill simplex");
    spec_options(g);
    g->add_option("--out", out_path, "JSON output path");
    g->callback([this] {
      action = [this] {
        const HillSpec spec = hill_spec(dim, cos);
        io.write_json(out_path, simplex_json(hill_simplex(spec)));
        io.err << "hill generate: d = " << dim << "\n";
        return kOk;
      };
    });

    CLI::App* s = h->add_subcommand("subdivide", "The m^d similar pieces of the Hill simplex");
    spec_options(s);
    s->add_option("--m", m, "scale factor m >= 2")->check(CLI::Range(2, 64));
    s->add_option("--out", out_path, "JSON output path");
    s->add_option("--obj", obj, "also write the pieces as OBJ (d = 3)");
    s->callback([this] {
      action = [this] {
        const Subdivision sub = subdivide(hill_spec(dim, cos), m);
        io.write_json(out_path, subdivision_json(sub));
        if (!obj.empty()) io.write(obj, [&](std::ostream& os) { export_obj(sub, os); });
        io.err << "hill subdivide: " << sub.pieces.size() << " pieces, ratio " << to_string(sub.ratio) << "\n";
        return kOk;
      };
    });

    CLI::App* v = h->add_subcommand("verify", "Check a subdivision: volume, similarity, congruence, disjointness, union");
    v->add_option("input", input, "subdivision JSON; - for stdin");
    v->add_option("--out", out_path, "JSON output path");
    v->callback([this] {
      action = [this] {
        const ReptileReport r = verify_reptile(subdivision_from_json(io.read_json(input)));
        io.write_json(out_path, reptile_report_json(r));
        io.err << "hill verify: " << r.pieces << " pieces, " << (r.all_ok() ? "all checks pass" : "FAILED") << " ("
               << (r.exact ? "exact" : "certified float") << ")\n";
        return r.all_ok() ? kOk : kFailed;
      };
    });

    CLI::App* gr = h->add_subcommand("grow", "Tile space by iterated substitution");
    spec_options(gr);
    gr->add_option("--m", m, "scale factor m >= 2")->check(CLI::Range(2, 64));
    gr->add_option("--generations", generations, "substitution depth")->check(CLI::Range(0, 64));
    gr->add_option("--budget", budget, "maximum number of cells");
    gr->add_option("--sample-pairs", sample_pairs, "random cell pairs tested for disjointness");
    gr->add_option("--out", out_path, "JSON output path");
    gr->add_option("--obj", obj, "stream the cells as OBJ (d = 3)");
    gr->callback([this] {
      action = [this] {
        const HillSpec spec = hill_spec(dim, cos);
        if (!obj.empty() && dim != 3) throw InputError("--obj needs dim 3");
        GrowResult result;
        if (obj.empty()) {
          result = grow_space_tiling(spec, m, generations, [](const Simplex&) {}, budget, sample_pairs);
        } else {
          io.write(obj, [&](std::ostream& os) {
            ObjWriter writer(os);
            result = grow_space_tiling(spec, m, generations, [&](const Simplex& c) { writer.add(c); }, budget, sample_pairs);
          });
        }
        io.write_json(out_path, grow_result_json(result));
        const bool ok = result.volume_ok && result.sampled_disjoint;
        io.err << "hill grow: " << result.cells << " cells" << (result.truncated ? " (truncated)" : "") << ", "
               << result.shared_facets << " shared facets, " << (ok ? "ok" : "FAILED") << "\n";
        return ok ? kOk : kFailed;
      };
    });
  }

  void angles() {
    CLI::App* a = app.add_subcommand("angles", "Cosines of rational angles");
    a->require_subcommand(1);
    CLI::App* c = a->add_subcommand("classify", "Is the value the cosine of a rational multiple of pi?");
    c->add_option("value", value, "exact value, e.g. \"(sqrt(5)-1)/4\" or \"phi - 1\"")->required();
    c->add_option("--out", out_path, "JSON output path");
    c->callback([this] {
      action = [this] {
        const AlgebraicReal x = parse_radical(value);
        const Json j = angle_json(x);
        io.write_json(out_path, j);
        io.err << "angles classify: " << (j["rational_angle"].is_null() ? "not a rational-angle cosine" : "cos(" + j["rational_angle"].get<std::string>() + ")") << "\n";
        return kOk;
      };
    });
    CLI::App* cat = a->add_subcommand("catalog", "All rational-angle cosines of one algebraic degree");
    cat->add_option("--degree", degree, "algebraic degree 1..8")->check(CLI::Range(1, 8));
    cat->add_option("--out", out_path, "JSON output path");
    cat->callback([this] {
      action = [this] {
        Json entries = Json::array();
        for (const auto& e : catalog(degree).entries)
          entries.push_back(Json{{"angle", e.angle.to_string()},
                                 {"degrees", e.angle.degrees()},
                                 {"cosine", e.cosine.is_rational() ? rational_json(*e.cosine.rational()) : algebraic_json(e.cosine)},
                                 {"decimal", e.cosine.approx()}});
        io.write_json(out_path, Json{{"degree", degree}, {"count", entries.size()}, {"entries", entries}});
        io.err << "angles catalog: " << entries.size() << " cosines of degree " << degree << "\n";
        return kOk;
      };
    });
  }

  void audit() {
    CLI::App* a = app.add_subcommand("audit", "Machine-checked non-existence of k-reptile tetrahedra for non-cube k");
    a->require_subcommand(1);
    CLI::App* r = a->add_subcommand("run", "All steps for every k in [2, kmax]");
    r->add_option("--kmax", kmax, "largest k")->check(CLI::PositiveNumber);
    CLI::Option* js = r->add_option("--json", json_path, "report path (default stdout)");
    CLI::Option* o = r->add_option("--out", out_path, "same as --json");
    js->excludes(o);
    r->callback([this] {
      action = [this] {
        if (kmax < 2) throw InputError("empty range: --kmax must be at least 2");
        const auto reports = run_full_audit(kmax);
        io.write_json(json_path.empty() ? out_path : json_path, full_audit_json(reports));
        bool ok = true;
        for (const auto& rep : reports) {
          io.err << "k = " << rep.k << ": " << rep.conclusion << "\n";
          ok = ok && rep.conclusion != "not excluded";
        }
        return ok ? kOk : kFailed;
      };
    });
    CLI::App* s = a->add_subcommand("step", "One audit step with its independent check");
    s->add_option("id", step_id, "step id")->required()->check(CLI::IsMember(step_ids()));
    s->add_option("--k", k, "k for the k-dependent steps")->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
    s->add_option("--out", out_path, "JSON output path");
    s->callback([this] {
      action = [this] {
        const AuditStep step = run_step(step_id, k);
        const CheckOutcome check = check_step(step);
        io.write_json(out_path, audit_step_json(step, &check));
        io.err << "audit step " << step_id << ": " << step.verdict << ", checker " << (check.ok ? "ok" : "FAILED") << " (" << check.detail << ")\n";
        return step.verdict != "fail" && check.ok ? kOk : kFailed;
      };
    });
  }

  void exporter() {
    CLI::App* e = app.add_subcommand("export", "Write a simplex or subdivision JSON as Wavefront OBJ (d = 3)");
    e->add_option("input", input, "simplex or subdivision JSON; - for stdin");
    e->add_option("--out", out_path, "OBJ output path (default stdout)");
    e->callback([this] {
      action = [this] {
        const Json j = io.read_json(input);
        if (j.contains("pieces")) {
          const Subdivision sub = subdivision_from_json(j);
          io.write(out_path, [&](std::ostream& os) { export_obj(sub, os); });
          io.err << "export: " << sub.pieces.size() << " tetrahedra\n";
        } else {
          const Simplex s = simplex_from_json(j.contains("simplex") ? j.at("simplex") : j);
          io.write(out_path, [&](std::ostream& os) { export_obj(s, os); });
          io.err << "export: 1 tetrahedron\n";
        }
        return kOk;
      };
    });
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Cli cli(Io{in, out, err});
  try {
    cli.app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    refinement_floor();
    return cli.action ? cli.action() : kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace reptile

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "jnrange/channels.hpp"
#include "jnrange/demos.hpp"
#include "jnrange/errors.hpp"
#include "jnrange/io.hpp"
#include "jnrange/jnr.hpp"
#include "jnrange/numrange.hpp"
#include "jnrange/parallel.hpp"
#include "jnrange/shadow.hpp"
#include "jnrange/states.hpp"
#include "jnrange/svg.hpp"

namespace fs = std::filesystem;
using namespace jnrange;
using io::json;

namespace {

enum Exit : int { kPass = 0, kViolation = 1, kParse = 2, kDimension = 3, kHypothesis = 4 };

struct Config {
  std::uint64_t seed = 42;
  std::size_t samples = 100000;
  std::size_t angles = kDefaultNumAngles;
  std::size_t bins = 128;
  std::string out;
  std::string format = "csv";
  std::size_t workers = 1;
};

void add_common(CLI::App* cmd, Config& cfg, bool with_format = true) {
  cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--samples", cfg.samples, "Monte-Carlo sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--angles", cfg.angles, "Support-function angles")
      ->check(CLI::Range(std::size_t{3}, std::size_t{1} << 24))
      ->capture_default_str();
  cmd->add_option("--bins", cfg.bins, "Histogram bins per axis")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--out", cfg.out, "Output path (stdout when omitted; a directory for demo)");
  if (with_format) {
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->capture_default_str();
  }
}

json metadata(const Config& cfg, const std::string& command) {
  return json{{"command", command}, {"seed", cfg.seed}, {"samples", cfg.samples},
              {"angles", cfg.angles},   {"bins", cfg.bins}, {"workers", cfg.workers}};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string sibling(const std::string& path, const std::string& ext) {
  return fs::path(path).replace_extension(ext).string();
}

// CSV outputs carry a JSON sidecar with the run metadata when written to a file.
void emit_csv(const std::string& csv, const Config& cfg, const std::string& command) {
  emit(csv, cfg.out);
  if (!cfg.out.empty()) emit(dump(metadata(cfg, command)), cfg.out + ".meta.json");
}

HermitianTuple load_tuple(const std::string& spec) {
  if (spec == "pauli") return pauli_basis();
  if (spec == "gellmann") return gellmann_basis();
  if (spec == "pauli_extended") return pauli_extended_tuple();
  return io::tuple_from_json(io::read_json_file(spec));
}

KrausChannel load_channel(const std::string& builtin, const std::string& file) {
  if (!builtin.empty() && !file.empty()) throw ParseError("give either --channel or --channel-file");
  if (!builtin.empty()) return builtin_channel(builtin);
  if (!file.empty()) return io::channel_from_json(io::read_json_file(file));
  throw ParseError("a channel is required (--channel name:params or --channel-file)");
}

int cmd_range(const Config& cfg, const std::string& matrix_path) {
  const ComplexMatrix a = io::matrix_from_json(io::read_json_file(matrix_path));
  if (a.rows() != a.cols()) throw DimensionError("range: matrix must be square");
  const RangeBoundary b = boundary(a, cfg.angles);
  const Complex bary = trace(a) / static_cast<double>(a.rows());
  std::ostringstream csv;
  io::write_boundary_csv(csv, b);

  if (cfg.format == "csv") {
    emit_csv(csv.str(), cfg, "range");
  } else if (cfg.format == "json") {
    json j{{"metadata", metadata(cfg, "range")},
           {"barycenter", {bary.real(), bary.imag()}},
           {"theta", b.angles},
           {"support", b.support_values}};
    json re = json::array(), im = json::array();
    for (const auto& z : b.boundary_points) {
      re.push_back(z.real());
      im.push_back(z.imag());
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    if (a.rows() == 2) {
      const auto e = ellipse_2x2(a);
      j["ellipse"] = {{"center", {e.center.real(), e.center.imag()}},
                      {"semi_major", e.semi_major},
                      {"semi_minor", e.semi_minor},
                      {"tilt", e.tilt}};
    }
    emit(dump(j), cfg.out);
  } else {
    if (cfg.out.empty()) throw ParseError("range: --format svg needs --out");
    SvgFigure fig("Numerical range");
    fig.add_closed_curve(b.boundary_points, "#1f77b4", "W(A)");
    fig.add_star(bary, "#000000", "barycenter");
    emit(fig.render(), cfg.out);
    // every plotted coordinate is also written as CSV
    emit(csv.str(), sibling(cfg.out, ".csv"));
    emit("re,im\n" + io::format_double(bary.real()) + "," + io::format_double(bary.imag()) + "\n",
         sibling(cfg.out, ".barycenter.csv"));
  }
  return kPass;
}

int cmd_jnr(const Config& cfg, const std::string& tuple_spec) {
  const HermitianTuple tuple = load_tuple(tuple_spec);
  if (cfg.format == "csv") {
    std::ostringstream csv;
    io::write_points_csv(csv, jnr_sample(tuple, cfg.samples, cfg.seed, cfg.workers));
    emit_csv(csv.str(), cfg, "jnr");
    return kPass;
  }
  if (cfg.format != "json") throw ParseError("jnr: supported formats are csv and json");
  json j{{"metadata", metadata(cfg, "jnr")},
         {"dim", tuple.dim()},
         {"m", tuple.size()},
         {"barycenter", tuple.barycenter()}};
  try {
    j["factorization"] = io::factorization_to_json(factorize(tuple));
  } catch (const DomainError&) {
    j["factorization"] = nullptr;  // scalar tuple: no traceless part
  }
  emit(dump(j), cfg.out);
  return kPass;
}

int cmd_shadow(const Config& cfg, const std::string& tuple_spec, unsigned moment_degree) {
  const HermitianTuple tuple = load_tuple(tuple_spec);
  const auto est = estimate_shadow(tuple, cfg.samples, cfg.seed, cfg.workers);
  if (moment_degree > 0) {
    std::ostringstream csv;
    io::write_moments_csv(csv, moments(est, moment_degree), tuple.size());
    emit_csv(csv.str(), cfg, "shadow");
    return kPass;
  }
  if (cfg.format == "csv") {
    std::ostringstream csv;
    io::write_points_csv(csv, est.samples);
    emit_csv(csv.str(), cfg, "shadow");
    return kPass;
  }
  if (cfg.format != "json") throw ParseError("shadow: supported formats are csv and json");
  json j = io::histogram_to_json(histogram(est, cfg.bins));
  j["metadata"] = metadata(cfg, "shadow");
  emit(dump(j), cfg.out);
  return kPass;
}

int emit_report(json report, bool passed, const Config& cfg, const std::string& command) {
  report["metadata"] = metadata(cfg, command);
  emit(dump(report), cfg.out);
  if (!cfg.out.empty()) std::cout << dump(report);
  return passed ? kPass : kViolation;
}

void print_error(const char* kind, const std::exception& e) {
  std::cerr << "jnrange: " << kind << ": " << e.what() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical ranges, joint numerical ranges and shadows"};
  app.require_subcommand(1);
  Config cfg;
  cfg.workers = default_workers();

  std::string matrix_path, tuple_spec = "pauli", channel_spec, channel_file, state_path,
                            unitary_path, variant = "extended";
  std::size_t iterations = 1, directions = 0, trials = 1000, iterates = 3;
  unsigned degree = 2, moment_degree = 0;
  double tol = 1e-8;

  auto* range = app.add_subcommand("range", "Boundary of the numerical range of a matrix");
  add_common(range, cfg);
  range->add_option("--matrix,matrix", matrix_path, "Matrix JSON file")->required();

  auto* jnr = app.add_subcommand("jnr", "Sample the joint numerical range of a Hermitian tuple");
  add_common(jnr, cfg);
  jnr->add_option("--tuple", tuple_spec, "pauli | gellmann | pauli_extended | tuple JSON file")
      ->capture_default_str();

  auto* shadow = app.add_subcommand("shadow", "Monte-Carlo joint numerical shadow");
  add_common(shadow, cfg);
  shadow->add_option("--tuple", tuple_spec, "pauli | gellmann | pauli_extended | tuple JSON file")
      ->capture_default_str();
  shadow->add_option("--moments", moment_degree, "Write the moment table up to this total degree");

  auto* channel = app.add_subcommand("channel", "Quantum channel operations");
  channel->require_subcommand(1);
  auto add_channel_opts = [&](CLI::App* c) {
    add_common(c, cfg, false);
    c->add_option("--channel,--builtin", channel_spec,
                  "decaying:p | phase_flip:p | double_flip:p,q | swap_conjugation");
    c->add_option("--channel-file", channel_file, "Channel JSON file");
  };
  auto* ch_apply = channel->add_subcommand("apply", "Apply a channel to a matrix or tuple");
  add_channel_opts(ch_apply);
  ch_apply->add_option("--matrix", matrix_path, "Matrix JSON file");
  ch_apply->add_option("--tuple", tuple_spec, "Tuple to map instead of a matrix");
  ch_apply->add_option("--iterations", iterations, "Number of applications")->capture_default_str();
  auto* ch_analyze = channel->add_subcommand("analyze", "Unitality and trace preservation");
  add_channel_opts(ch_analyze);
  auto* ch_decompose = channel->add_subcommand("decompose", "Pure-state decomposition of Phi(|psi><psi|)");
  add_channel_opts(ch_decompose);
  ch_decompose->add_option("--state", state_path, "State JSON file")->required();

  auto* verify = app.add_subcommand("verify", "Invariant checks; exit 0 on pass, 1 on violation");
  verify->require_subcommand(1);
  auto* v_incl = verify->add_subcommand("inclusion", "W(Phi(A)) inside W(A) for unital Phi");
  add_common(v_incl, cfg, false);
  v_incl->add_option("--channel,--builtin", channel_spec, "Builtin channel name:params");
  v_incl->add_option("--channel-file", channel_file, "Channel JSON file");
  v_incl->add_option("--matrix", matrix_path, "Matrix JSON file (else --tuple)");
  v_incl->add_option("--tuple", tuple_spec, "Hermitian tuple")->capture_default_str();
  v_incl->add_option("--directions", directions, "Support directions (default: --angles)");
  v_incl->add_option("--tol", tol, "Violation tolerance")->capture_default_str();
  auto* v_inj = verify->add_subcommand("injectivity", "Affine injectivity of the JNR map");
  add_common(v_inj, cfg, false);
  v_inj->add_option("--tuple", tuple_spec, "Hermitian tuple")->capture_default_str();
  v_inj->add_option("--trials", trials, "Random state pairs")->capture_default_str();
  v_inj->add_option("--tol", tol, "Violation tolerance")->capture_default_str();
  auto* v_inv = verify->add_subcommand("invariance", "Shadow moments under unitary conjugation");
  add_common(v_inv, cfg, false);
  v_inv->add_option("--tuple", tuple_spec, "Hermitian tuple")->capture_default_str();
  v_inv->add_option("--unitary", unitary_path, "Unitary JSON file (default: Haar random)");
  v_inv->add_option("--degree", degree, "Maximum moment degree")->capture_default_str();
  auto* v_ball = verify->add_subcommand("ball", "Shadow of sigma_j (x) I is uniform on the unit ball");
  add_common(v_ball, cfg, false);
  v_ball->add_option("--variant", variant, "extended | swapped")
      ->check(CLI::IsMember({"extended", "swapped"}))
      ->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Regenerate the example figure data");
  add_common(demo, cfg);
  std::string demo_name;
  demo->add_option("name", demo_name, "fig1a | fig1b | fig2")
      ->required()
      ->check(CLI::IsMember({"fig1a", "fig1b", "fig2"}));
  demo->add_option("--iterates", iterates, "Number of iterates")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*range) return cmd_range(cfg, matrix_path);
    if (*jnr) return cmd_jnr(cfg, tuple_spec);
    if (*shadow) return cmd_shadow(cfg, tuple_spec, moment_degree);

    if (*ch_apply) {
      const KrausChannel ch = load_channel(channel_spec, channel_file);
      if (!matrix_path.empty()) {
        const ComplexMatrix a = io::matrix_from_json(io::read_json_file(matrix_path));
        emit(dump(io::matrix_to_json(apply_iterated(ch, a, iterations))), cfg.out);
      } else {
        HermitianTuple t = load_tuple(tuple_spec);
        for (std::size_t i = 0; i < iterations; ++i) t = apply(ch, t);
        json ops = json::array();
        for (const auto& op : t.operators()) ops.push_back(io::matrix_to_json(op));
        emit(dump(json{{"operators", std::move(ops)}}), cfg.out);
      }
      return kPass;
    }
    if (*ch_analyze) {
      emit(dump(io::report_to_json(analyze(load_channel(channel_spec, channel_file)))), cfg.out);
      return kPass;
    }
    if (*ch_decompose) {
      const KrausChannel ch = load_channel(channel_spec, channel_file);
      const PureState psi = io::state_from_json(io::read_json_file(state_path));
      emit(dump(io::decomposition_to_json(decompose_pure(ch, psi))), cfg.out);
      return kPass;
    }

    if (*v_incl) {
      const KrausChannel ch = load_channel(channel_spec, channel_file);
      const std::size_t dirs = directions > 0 ? directions : cfg.angles;
      const InclusionReport r =
          matrix_path.empty()
              ? verify_inclusion(ch, load_tuple(tuple_spec), dirs, cfg.samples, cfg.seed, tol)
              : verify_inclusion(ch, io::matrix_from_json(io::read_json_file(matrix_path)), dirs,
                                 cfg.samples, cfg.seed, tol);
      return emit_report(io::report_to_json(r), r.passed(), cfg, "verify inclusion");
    }
    if (*v_inj) {
      const auto r = verify_affine_injectivity(load_tuple(tuple_spec), trials, cfg.seed, tol);
      return emit_report(io::report_to_json(r), r.violations == 0, cfg, "verify injectivity");
    }
    if (*v_inv) {
      const HermitianTuple t = load_tuple(tuple_spec);
      ComplexMatrix u;
      if (unitary_path.empty()) {
        CounterRng rng(CounterRng::substream(cfg.seed, 0x756e6974));
        u = haar_unitary(t.dim(), rng);
      } else {
        u = io::matrix_from_json(io::read_json_file(unitary_path));
      }
      const auto r = unitary_invariance_check(t, u, cfg.samples, degree, cfg.seed, cfg.seed + 1, cfg.workers);
      return emit_report(io::report_to_json(r), r.passed, cfg, "verify invariance");
    }
    if (*v_ball) {
      const auto r = ball_shadow_check(cfg.samples, cfg.seed,
                                       variant == "swapped" ? BallVariant::swapped : BallVariant::extended);
      return emit_report(io::report_to_json(r), r.passed(), cfg, "verify ball");
    }

    if (*demo) {
      const Demo d = run_demo(demo_from_string(demo_name), iterates, cfg.angles);
      const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
      fs::create_directories(dir);
      json files = json::array();
      auto write = [&](const std::string& name, const std::string& text) {
        emit(text, (dir / name).string());
        files.push_back(name);
      };
      std::ostringstream summary;
      summary << "label,barycenter_re,barycenter_im\n";
      for (const auto& it : d.iterates) {
        std::ostringstream csv;
        io::write_boundary_csv(csv, it.boundary);
        write(demo_name + "_" + it.label + ".csv", csv.str());
        summary << it.label << ',' << io::format_double(it.barycenter.real()) << ','
                << io::format_double(it.barycenter.imag()) << '\n';
      }
      write(demo_name + "_barycenters.csv", summary.str());
      // CSVs are always written; the figure is skipped only for an explicit --format csv
      if (demo->get_option("--format")->count() == 0 || cfg.format != "csv") {
        write(demo_name + ".svg", demo_svg(d));
      }
      json meta = metadata(cfg, "demo " + demo_name);
      meta.erase("workers");
      meta["files"] = files;
      std::cout << dump(meta);
      return kPass;
    }
  } catch (const ParseError& e) {
    print_error("parse error", e);
    return kParse;
  } catch (const DimensionError& e) {
    print_error("dimension error", e);
    return kDimension;
  } catch (const HypothesisError& e) {
    print_error("hypothesis violation", e);
    return kHypothesis;
  } catch (const DomainError& e) {
    print_error("invalid input", e);
    return kParse;
  } catch (const std::exception& e) {
    print_error("error", e);
    return kViolation;
  }
  return kPass;
}

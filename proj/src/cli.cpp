#include "salem/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "salem/json_io.hpp"

namespace salem::cli {

namespace {

using nlohmann::json;

struct Opts {
  std::string config;
  std::string out_path;
  std::string format = "json";
  std::string mode = "det";
  double x = 0.0;
  std::vector<int> digits;
  std::vector<int> period;
  std::vector<int> levels{2, 3, 4, 5, 6, 7, 8};
  int rank = 0;
  int witness_rank = 6;
  int cover_rank = 1;
  int depth = 0;  // 0 selects the system default
  int n = 0;
  std::uint64_t seed = 0;
};

int depth_or_default(const Opts& o, const SalemSystem& sys) {
  return o.depth > 0 ? o.depth : default_depth(sys);
}

GraphCloud make_cloud(const Opts& o, const ModifiedSalem& f) {
  if (o.mode == "chaos")
    return attractor_chaos(f, static_cast<std::size_t>(o.n > 0 ? o.n : 10000),
                           o.seed);
  if (o.mode != "det")
    fail(ErrorKind::UsageError, "mode must be det or chaos");
  int depth = o.depth;
  if (depth == 0) {
    depth = 1;
    double pts = f.system.q;
    while (pts < 1000.0) {
      pts *= f.system.q;
      ++depth;
    }
  }
  return attractor_deterministic(f, depth);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Opts o;
  CLI::App app{"permutation-modified Salem functions over weighted digit systems"};
  app.name("salemfun");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "system config JSON file")->required();
    sub->add_option("--out", o.out_path, "write the result to a file");
    return sub;
  };
  auto add_digits = [&](CLI::App* sub, bool with_period) {
    sub->add_option("--digits", o.digits, "comma separated digits")
        ->delimiter(',')
        ->required();
    if (with_period)
      sub->add_option("--period", o.period, "periodic tail digits")
          ->delimiter(',');
    return sub;
  };

  auto* c_eval = add_common(app.add_subcommand("eval", "evaluate f at a point"));
  c_eval->add_option("--x", o.x, "argument in [0,1]")->required();
  c_eval->add_option("--depth", o.depth, "digit depth (default from weights)");

  auto* c_encode = add_common(app.add_subcommand("encode", "digit expansion of x"));
  c_encode->add_option("--x", o.x, "argument in [0,1]")->required();
  c_encode->add_option("--depth", o.depth, "number of digits");

  auto* c_decode =
      add_common(app.add_subcommand("decode", "value of a digit string"));
  add_digits(c_decode, true);

  auto* c_jump = add_common(app.add_subcommand(
      "jump", "one-sided limits at a finite-expansion point"));
  add_digits(c_jump, false);

  auto* c_residual = add_common(app.add_subcommand(
      "residual", "functional-equation residual at digit index n"));
  c_residual->add_option("--x", o.x, "argument in [0,1]");
  c_residual->add_option("--digits", o.digits, "digits of the point")
      ->delimiter(',');
  c_residual->add_option("--n", o.n, "digit index (>=1)")->required();
  c_residual->add_option("--depth", o.depth, "evaluation depth");

  auto* c_increment = add_common(
      app.add_subcommand("increment", "increment of f over a cylinder"));
  c_increment->add_option("--digits", o.digits, "cylinder base digits")
      ->delimiter(',')
      ->required();

  auto* c_rate = add_common(app.add_subcommand(
      "rate", "a.e. geometric decay rate of the derivative ratios"));
  (void)c_rate;

  auto* c_freq = add_common(
      app.add_subcommand("freq", "digit frequencies of a string sample"));
  c_freq->add_option("--digits", o.digits, "prefix digits")->delimiter(',');
  c_freq->add_option("--period", o.period, "periodic tail digits")
      ->delimiter(',');
  c_freq->add_option("--n", o.n, "number of leading digits to count")
      ->required();
  c_freq->add_option("--seed", o.seed,
                     "sample digits with P(t)=p_t instead of --digits");

  auto* c_integral = add_common(app.add_subcommand(
      "integral", "closed-form integral of f over [0,1]"));
  c_integral->add_option("--rank", o.rank,
                         "also report the rank-r left Riemann sum");

  auto* c_moran = add_common(app.add_subcommand(
      "moran", "similarity dimension of a digit subset"));
  c_moran->add_option("--digits", o.digits, "digit subset")
      ->delimiter(',')
      ->required();

  auto* c_dims = add_common(app.add_subcommand(
      "dims", "box-dimension bracket of the graph from the extreme weights"));
  (void)c_dims;

  auto* c_fixedset =
      add_common(app.add_subcommand("fixedset", "classify {x : f(x) = x}"));
  (void)c_fixedset;

  auto* c_witness = add_common(app.add_subcommand(
      "witness", "search for a non-monotonicity witness pair"));
  c_witness->add_option("--rank", o.witness_rank, "maximum scan rank");

  auto* c_ifs = add_common(app.add_subcommand(
      "ifs", "affine map family whose attractor is the graph"));
  (void)c_ifs;

  auto* c_attractor =
      add_common(app.add_subcommand("attractor", "points on the graph"));
  c_attractor->add_option("--mode", o.mode, "det or chaos")->default_val("det");
  c_attractor->add_option("--depth", o.depth, "composition depth (det mode)");
  c_attractor->add_option("--n", o.n, "iteration count (chaos mode)");
  c_attractor->add_option("--seed", o.seed, "chaos generator seed");
  c_attractor->add_option("--format", o.format, "json or csv")
      ->default_val("json");

  auto* c_boxcount = add_common(app.add_subcommand(
      "boxcount", "occupied-box counts of a generated cloud"));
  c_boxcount->add_option("--mode", o.mode, "det or chaos")->default_val("det");
  c_boxcount->add_option("--depth", o.depth, "composition depth (det mode)");
  c_boxcount->add_option("--n", o.n, "iteration count (chaos mode)");
  c_boxcount->add_option("--seed", o.seed, "chaos generator seed");
  c_boxcount
      ->add_option("--levels", o.levels,
                   "grid exponents j for sizes 2^-j, strictly increasing")
      ->delimiter(',');

  auto* c_cover = add_common(app.add_subcommand(
      "cover", "rectangle cover area of the graph at a rank"));
  c_cover->add_option("--rank", o.cover_rank, "cover rank");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("salemfun");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const ModifiedSalem f = load_config(o.config);
    const SalemSystem& sys = f.system;

    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
      file.open(o.out_path);
      if (!file) fail(ErrorKind::ConfigError, "cannot open " + o.out_path);
      sink = &file;
    }
    auto emit = [&](const json& j) { *sink << j.dump() << "\n"; };

    if (app.got_subcommand(c_eval)) {
      emit(json{{"x", o.x}, {"value", eval_f(f, o.x, depth_or_default(o, sys))}});
    } else if (app.got_subcommand(c_encode)) {
      emit(digit_string_to_json(encode(sys, o.x, depth_or_default(o, sys))));
    } else if (app.got_subcommand(c_decode)) {
      emit(json{{"value", decode(sys, make_digit_string(sys, o.digits, o.period))}});
    } else if (app.got_subcommand(c_jump)) {
      emit(to_json(one_sided_limits(f, make_digit_string(sys, o.digits))));
    } else if (app.got_subcommand(c_residual)) {
      const int depth = o.depth > 0 ? o.depth : 40;
      DigitString d =
          o.digits.empty()
              ? encode(sys, o.x, o.n + depth)
              : make_digit_string(sys, o.digits, o.period);
      emit(json{{"n", o.n},
                {"depth", depth},
                {"residual", functional_eq_residual(f, d, o.n, depth)}});
    } else if (app.got_subcommand(c_increment)) {
      emit(to_json(increment_on_cylinder(f, Cylinder{o.digits})));
    } else if (app.got_subcommand(c_rate)) {
      emit(json{{"value", singularity_rate(f)}});
    } else if (app.got_subcommand(c_freq)) {
      DigitString d = c_freq->count("--seed") > 0
                          ? sample_digits(sys, static_cast<std::size_t>(o.n), o.seed)
                          : make_digit_string(sys, o.digits, o.period);
      emit(to_json(digit_frequencies(sys, d, o.n)));
    } else if (app.got_subcommand(c_integral)) {
      json j = to_json(integral_closed_form(f));
      if (o.rank > 0) j["riemann"] = integral_riemann(f, o.rank);
      emit(j);
    } else if (app.got_subcommand(c_moran)) {
      emit(to_json(moran_dimension(sys, o.digits)));
    } else if (app.got_subcommand(c_dims)) {
      emit(to_json(graph_dimension_bounds(f)));
    } else if (app.got_subcommand(c_fixedset)) {
      emit(to_json(fixed_point_set(f)));
    } else if (app.got_subcommand(c_witness)) {
      if (auto w = monotonicity_witness(f, o.witness_rank)) {
        emit(json{{"found", true},
                  {"rank", w->rank},
                  {"x1", w->x1},
                  {"x2", w->x2},
                  {"f1", w->f1},
                  {"f2", w->f2}});
      } else {
        emit(json{{"found", false}});
      }
    } else if (app.got_subcommand(c_ifs)) {
      json maps = json::array();
      for (const auto& m : ifs_maps(f)) maps.push_back(to_json(m));
      emit(maps);
    } else if (app.got_subcommand(c_attractor)) {
      const GraphCloud cloud = make_cloud(o, f);
      if (o.format == "csv")
        write_csv(cloud, *sink);
      else if (o.format == "json")
        write_jsonl(cloud, *sink);
      else
        fail(ErrorKind::UsageError, "format must be json or csv");
    } else if (app.got_subcommand(c_boxcount)) {
      std::vector<double> sizes;
      sizes.reserve(o.levels.size());
      for (int j : o.levels) sizes.push_back(std::ldexp(1.0, -j));
      emit(to_json(box_count(make_cloud(o, f), sizes)));
    } else if (app.got_subcommand(c_cover)) {
      emit(to_json(cover_area(f, o.cover_rank)));
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::UsageError ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace salem::cli

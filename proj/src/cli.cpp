#include "psc/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "psc/code_file.hpp"
#include "psc/distance_check.hpp"
#include "psc/ferrers.hpp"
#include "psc/multilevel.hpp"
#include "psc/puncturing.hpp"

namespace psc {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Field::Value> vector_of_digits(const std::string& text, const Field& field) {
    std::vector<Field::Value> v;
    for (char c : text) {
        const int d = digit_value(c);
        if (d < 0 || static_cast<std::uint32_t>(d) >= field.order())
            throw UsageError("vector '" + text + "' has a digit outside GF(" + std::to_string(field.order()) + ")");
        v.push_back(static_cast<Field::Value>(d));
    }
    return v;
}

std::string join_one_based(const std::vector<std::size_t>& xs) {
    std::string s;
    for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x + 1);
    return s;
}

void print_fibers(std::ostream& out, const SubspaceCode& code, bool tuned) {
    out << "  fiber  v" << std::string(code.ambient() > 1 ? code.ambient() - 1 : 0, ' ')
        << "  dots  bound  dim  size  attains";
    if (tuned) out << "  trial  kept";
    out << '\n';
    std::size_t idx = 0;
    for (const auto& f : code.fibers()) {
        out << "  " << std::setw(5) << ++idx << "  " << f.v.to_string() << "  " << std::setw(4)
            << diagram_of(f.v).dots() << "  " << std::setw(5) << f.bound << "  " << std::setw(3) << f.dimension << "  "
            << std::setw(4) << f.size << "  " << (f.attains_bound() ? "yes" : "NO");
        if (tuned) out << "  " << std::setw(5) << f.trial << "  " << std::setw(4) << f.preferred;
        out << '\n';
    }
}

ParsedCode load_code(const std::string& path, std::ostream& err) {
    auto parsed = parse_code(read_file(path));
    for (const auto& w : parsed.warnings) err << "warning: " << path << ": " << w << '\n';
    return parsed;
}

int cmd_construct(std::uint32_t q, std::size_t n, std::size_t k, std::size_t d, const std::string& skeleton_path,
                  std::size_t tune_coordinate, const std::string& tune_v, std::size_t trials, std::uint64_t seed,
                  const std::string& out_path, std::ostream& out) {
    if (d < 2 || d % 2 != 0) throw UsageError("construct needs an even --d >= 2 (d = 2 delta)");
    const auto field = Field::of_order(q);
    ConstructOptions options;
    if (!skeleton_path.empty()) options.skeleton = parse_skeleton(read_file(skeleton_path));
    const bool tuned = tune_coordinate != 0 || !tune_v.empty();
    if (tuned) {
        if (tune_coordinate == 0 || tune_v.empty())
            throw UsageError("--tune-drop-coordinate and --tune-v must be given together");
        const auto v = vector_of_digits(tune_v, field);
        if (v.size() != n) throw UsageError("--tune-v must have n digits");
        const auto hyperplane = coordinate_hyperplane(field, n, tune_coordinate);
        options.preference = FiberPreference{puncture_survivor(hyperplane, v), {}, trials, seed};
        if (field.is_binary() && n <= gf2::max_cols)
            options.preference->accept_packed = packed_puncture_survivor(hyperplane, v);
    }

    const auto start = std::chrono::steady_clock::now();
    const auto code = construct_code(field, n, k, d / 2, options);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;

    out << "constructed code in G_" << q << "(" << n << "," << k << "): size " << code.size() << ", claimed distance "
        << code.claimed_distance() << " (" << std::fixed << std::setprecision(3) << took.count() << " s)\n";
    print_fibers(out, code, tuned);
    std::size_t deficits = 0;
    for (const auto& f : code.fibers()) deficits += !f.attains_bound();
    if (deficits == 0)
        out << "bound attained on all " << code.fibers().size() << " fibers\n";
    else
        out << "bound NOT attained on " << deficits << " of " << code.fibers().size() << " fibers\n";
    if (!out_path.empty()) write_file(out_path, emit_code(code));
    return exit_pass;
}

int cmd_skeleton(std::size_t n, std::size_t k, std::size_t d, const std::string& out_path, std::ostream& out) {
    const auto skeleton = lexicode_skeleton(n, k, d);
    const auto text = emit_skeleton(skeleton);
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
    out << "skeleton size " << skeleton.words.size() << '\n';
    return exit_pass;
}

int cmd_bound(const std::string& v_text, std::size_t delta, bool ascii, std::ostream& out) {
    const auto v = BinaryVector::from_string(v_text);
    const std::string dot = ascii ? "." : "•";
    const auto form = echelon_ferrers_form(v);
    const auto s = diagram_of(v);
    out << "v = " << v.to_string() << "  (n=" << v.size() << ", k=" << v.weight() << ")\n";
    out << "EF(v), pivot columns " << join_one_based(form.pivots()) << ":\n" << form.render(dot);
    out << "S, columns " << join_one_based(s.columns()) << ":\n" << s.render(dot);
    out << "dots: " << s.dots() << "  rows:";
    for (std::size_t i = 0; i < s.rows(); ++i) out << ' ' << s.row_dots(i);
    out << "  columns:";
    for (std::size_t j = 0; j < s.cols(); ++j) out << ' ' << s.col_dots(j);
    out << "\nbounding box: " << s.box_rows() << " x " << s.box_cols() << '\n';

    const std::size_t m = s.box_rows(), t = s.box_cols();
    if (delta > m || delta > t) {
        out << "dimension bound (delta=" << delta << "): 0 (window empty)\n";
        return exit_pass;
    }
    std::size_t rows = 0, cols = 0;
    for (std::size_t i = delta - 1; i < m; ++i) rows += s.row_dots(i);
    for (std::size_t j = 0; j + delta <= t; ++j) cols += s.col_dots(j);
    out << "dimension bound (delta=" << delta << "): min(" << rows << ", " << cols
        << ") = " << dimension_bound(s, delta) << '\n';
    return exit_pass;
}

int cmd_puncture(const std::string& in_path, std::size_t dropped, const std::string& v_text,
                 const std::string& out_path, std::ostream& out, std::ostream& err) {
    const auto parsed = load_code(in_path, err);
    const auto& code = parsed.code;
    const auto v = vector_of_digits(v_text, code.field());
    if (v.size() != code.ambient()) throw UsageError("--v must have n=" + std::to_string(code.ambient()) + " digits");
    const auto hyperplane = coordinate_hyperplane(code.field(), code.ambient(), dropped);
    const auto result = puncture(code, hyperplane, v);

    out << "codewords inside Q: " << result.contained << "\ncodewords through v: " << result.through
        << "\noverlap: " << result.overlap << "\npunctured code in P_" << code.field().order() << "("
        << code.ambient() - 1 << "): size " << result.code.size() << ", claimed distance "
        << result.code.claimed_distance() << '\n';
    for (const auto& [dim, count] : result.code.dimension_profile()) out << "  dimension " << dim << ": " << count << '\n';
    if (!out_path.empty()) write_file(out_path, emit_code(result.code));
    return exit_pass;
}

int cmd_verify(const std::string& in_path, std::optional<std::size_t> expect, std::uint64_t sample,
               std::uint64_t seed, std::ostream& out, std::ostream& err) {
    const auto parsed = load_code(in_path, err);
    const auto& code = parsed.code;
    const auto target = expect ? *expect : code.claimed_distance();
    if (code.size() < 2) throw UsageError("verify needs a code with at least two codewords");

    const auto report = sample ? sample_min_distance(code, target, sample, seed) : verify_min_distance(code, target);
    out << (report.exhaustive ? "exhaustive" : "sampled") << " scan of " << report.pairs << " pairs: minimum distance "
        << *report.minimum << ", expected >= " << target << (report.equal ? " (equal)" : "") << '\n';
    bool ok = report.pass;

    if (!code.fibers().empty() && code.constant_dimension()) {
        const auto lemma = verify_lifting_distances(code, sample ? std::optional(sample) : std::nullopt, seed);
        out << "lifting check over " << lemma.pairs << " pairs (" << lemma.same_fiber_pairs << " same fiber, "
            << lemma.cross_fiber_pairs << " cross fiber): " << lemma.violations << " violations\n";
        for (const auto& e : lemma.examples) out << "  " << e << '\n';
        ok = ok && lemma.ok();
    }
    out << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? exit_pass : exit_verification_failed;
}

int cmd_stats(const std::string& in_path, std::ostream& out, std::ostream& err) {
    const auto parsed = load_code(in_path, err);
    const auto& code = parsed.code;
    out << "q=" << code.field().order() << " n=" << code.ambient() << " size=" << code.size()
        << " claimed distance=" << code.claimed_distance() << '\n';
    out << "dimension profile:\n";
    for (const auto& [dim, count] : code.dimension_profile()) out << "  " << dim << ": " << count << '\n';
    std::map<BinaryVector, std::size_t> histogram;
    for (const auto& w : code.words()) ++histogram[identifying_vector(w)];
    out << "identifying vectors:\n";
    for (auto it = histogram.rbegin(); it != histogram.rend(); ++it)
        out << "  " << it->first.to_string() << ": " << it->second << '\n';
    return exit_pass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subspace codes for random network coding: multilevel construction, puncturing, verification", "psc"};
    app.require_subcommand(1);

    std::uint32_t q = 2;
    std::size_t n = 0, k = 0, d = 0, delta = 2, dropped = 0, tune_coordinate = 0, trials = 1024;
    std::string skeleton_path, out_path, in_path, v_text, tune_v;
    std::optional<std::size_t> expect;
    std::uint64_t sample = 0, seed = default_search_seed;
    bool ascii = false;

    auto* construct = app.add_subcommand("construct", "multilevel construction from a constant-weight skeleton");
    construct->add_option("--q", q, "field size")->default_val(2);
    construct->add_option("--n", n, "ambient dimension")->required();
    construct->add_option("--k", k, "subspace dimension")->required();
    construct->add_option("--d", d, "subspace distance, even (d = 2 delta)")->required();
    construct->add_option("--skeleton", skeleton_path, "file with one skeleton word per line");
    construct->add_option("--tune-drop-coordinate", tune_coordinate,
                          "choose fiber codes that keep the most codewords when punctured at this coordinate");
    construct->add_option("--tune-v", tune_v, "the vector v for --tune-drop-coordinate");
    construct->add_option("--trials", trials, "equivalent codes tried per fiber when tuning")->default_val(1024);
    construct->add_option("--seed", seed, "seed for the tuning search");
    construct->add_option("--out", out_path, "output code file");

    auto* skeleton = app.add_subcommand("skeleton", "greedy constant-weight lexicode");
    skeleton->add_option("--n", n)->required();
    skeleton->add_option("--k", k)->required();
    skeleton->add_option("--d", d, "minimum Hamming distance, even")->required();
    skeleton->add_option("--out", out_path);

    auto* bound = app.add_subcommand("bound", "echelon Ferrers form, diagram and rank-code dimension bound");
    bound->add_option("--v", v_text, "identifying vector, e.g. 0110100")->required();
    bound->add_option("--delta", delta, "minimum rank distance")->default_val(2);
    bound->add_flag("--ascii", ascii, "draw dots as '.'");

    auto* punct = app.add_subcommand("puncture", "puncture by a coordinate hyperplane and a vector outside it");
    punct->add_option("--in", in_path)->required();
    punct->add_option("--drop-coordinate", dropped, "1-based coordinate removed by Q")->required();
    punct->add_option("--v", v_text, "vector outside Q")->required();
    punct->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "minimum distance and lifting checks");
    verify->add_option("--in", in_path)->required();
    verify->add_option("--expect-distance", expect, "required minimum distance (default: header d)");
    auto* exhaustive = verify->add_flag("--exhaustive", "scan all pairs (default)");
    auto* sampled = verify->add_option("--sample", sample, "scan this many random pairs instead");
    exhaustive->excludes(sampled);
    verify->add_option("--seed", seed, "seed for --sample");

    auto* stats = app.add_subcommand("stats", "size, dimension profile and identifying-vector histogram");
    stats->add_option("--in", in_path)->required();

    std::vector<std::string> argv_store{"psc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "psc: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (construct->parsed())
            return cmd_construct(q, n, k, d, skeleton_path, tune_coordinate, tune_v, trials, seed, out_path, out);
        if (skeleton->parsed()) return cmd_skeleton(n, k, d, out_path, out);
        if (bound->parsed()) return cmd_bound(v_text, delta, ascii, out);
        if (punct->parsed()) return cmd_puncture(in_path, dropped, v_text, out_path, out, err);
        if (verify->parsed()) return cmd_verify(in_path, expect, sample, seed, out, err);
        if (stats->parsed()) return cmd_stats(in_path, out, err);
    } catch (const std::exception& e) {
        err << "psc: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace psc

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psldpc/construct.hpp"
#include "psldpc/girth.hpp"
#include "psldpc/io.hpp"
#include "psldpc/latin.hpp"
#include "psldpc/mask.hpp"
#include "psldpc/matrix.hpp"
#include "psldpc/rng.hpp"
#include "psldpc/simulate.hpp"

namespace {

using nlohmann::json;
using namespace psldpc;

LatinSquare latin_from_spec(const std::string& spec, int order) {
    if (spec == "circulant") return latin_circulant(order);
    LatinSquare a = read_latin(load_text(spec));
    if (a.order() != order) {
        throw std::runtime_error("Latin square order " + std::to_string(a.order()) +
                                 " does not match --n " + std::to_string(order));
    }
    return a;
}

MaskSet maskset_from_files(const std::vector<std::string>& paths, int order) {
    if (paths.size() == 1) {
        return extend_maskset(maskset_from_primary(read_mask(load_text(paths[0]))), order);
    }
    std::vector<BinaryMask> masks;
    masks.reserve(paths.size());
    for (const auto& path : paths) masks.push_back(read_mask(load_text(path)));
    if (static_cast<int>(masks.size()) > order) {
        throw std::runtime_error("more masks than the Latin square order");
    }
    while (static_cast<int>(masks.size()) < order) {
        masks.push_back(BinaryMask::zeros(masks.front().rows(), masks.front().cols()));
    }
    if (!validate_maskset(masks)) {
        throw std::runtime_error("mask set is invalid: cells are not covered exactly once");
    }
    return MaskSet(std::move(masks));
}

std::vector<double> parse_snr_range(const std::string& spec) {
    std::vector<double> points;
    const auto first_colon = spec.find(':');
    if (first_colon == std::string::npos) {
        points.push_back(std::stod(spec));
        return points;
    }
    const auto second_colon = spec.find(':', first_colon + 1);
    if (second_colon == std::string::npos) {
        throw std::runtime_error("--snr expects a single value or start:step:stop");
    }
    const double start = std::stod(spec.substr(0, first_colon));
    const double step = std::stod(spec.substr(first_colon + 1, second_colon - first_colon - 1));
    const double stop = std::stod(spec.substr(second_colon + 1));
    if (step <= 0.0) throw std::runtime_error("--snr step must be positive");
    for (double v = start; v <= stop + 1e-9; v += step) points.push_back(v);
    return points;
}

std::string format_hist(const std::map<int, int>& hist) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto [w, count] : hist) {
        if (!first) out << ", ";
        out << w << ": " << count;
        first = false;
    }
    out << '}';
    return out.str();
}

json hist_to_json(const std::map<int, int>& hist) {
    json j = json::object();
    for (auto [w, count] : hist) j[std::to_string(w)] = count;
    return j;
}

int cmd_gen_base(const std::string& kind, int p, int l, const std::string& out) {
    if (kind != "gcd") throw std::runtime_error("unknown base kind '" + kind + "' (expected: gcd)");
    save_text(out, write_exponent(gcd_base(p, l)));
    std::cout << "wrote " << out << " (4 x " << l << ", P=" << p << ")\n";
    return 0;
}

int cmd_gen_mask(const std::string& kind, int m, int n, const std::string& out) {
    MaskSet ms = [&] {
        if (kind == "d") return mask_diagonal(m, n);
        if (kind == "t") return mask_triangle(m, n);
        if (kind == "h") return mask_hamming(m, n);
        throw std::runtime_error("unknown partition '" + kind + "' (expected: d, t or h)");
    }();
    save_text(out, write_mask(ms.mask(0)));
    std::cout << "wrote " << out << " (" << m << " x " << n << " primary mask, " << kind
              << " partition)\n";
    return 0;
}

int cmd_gen_latin(const std::string& kind, int n, const std::string& out) {
    if (kind != "circulant") throw std::runtime_error("unknown Latin kind '" + kind + "' (expected: circulant)");
    save_text(out, write_latin(latin_circulant(n)));
    std::cout << "wrote " << out << " (order " << n << ")\n";
    return 0;
}

int cmd_splice(const std::string& base, const std::vector<std::string>& masks, int order,
               const std::string& latin, const std::string& out) {
    const ExponentMatrix e0 = read_exponent(load_text(base));
    const MaskSet ms = maskset_from_files(masks, order);
    if (ms.rows() != e0.block_rows() || ms.cols() != e0.block_cols()) {
        throw std::runtime_error("mask shape does not match the base exponent matrix");
    }
    const LatinSquare a = latin_from_spec(latin, order);
    const ExponentMatrix e = splice_exponent(e0, ms, a);
    save_text(out, write_exponent(e));
    std::cout << "wrote " << out << " (" << e.block_rows() << " x " << e.block_cols() << ", P="
              << e.lift_size() << ")\n";
    return 0;
}

int cmd_girth(const std::string& exponent, const std::string& alist, int cap, bool want_witness,
              bool as_json, bool quiet) {
    GirthResult result{};
    CycleWitness witness;
    bool have_witness = false;
    if (!alist.empty()) {
        result = girth_graph(read_alist(load_text(alist)), cap);
    } else {
        const ExponentMatrix e = read_exponent(load_text(exponent));
        result = girth_exponent(e, cap, want_witness ? &witness : nullptr);
        have_witness = want_witness && result.is_exact();
    }
    if (as_json) {
        json j;
        if (result.is_exact()) {
            j["girth"] = result.value;
        } else {
            j["girth_exceeds_cap"] = result.cap;
        }
        if (have_witness) {
            json pos = json::array();
            for (auto [i, jj] : witness.positions) pos.push_back({i, jj});
            j["witness"] = {{"positions", pos}, {"alternating_sum", witness.alternating_sum}};
        }
        std::cout << j.dump() << '\n';
        return 0;
    }
    if (result.is_exact()) {
        std::cout << "girth=" << result.value << '\n';
    } else {
        std::cout << "girth>cap=" << result.cap << '\n';
    }
    if (have_witness && !quiet) {
        std::cout << "witness:";
        for (auto [i, j] : witness.positions) std::cout << " (" << i << ',' << j << ')';
        std::cout << "\nwitness_sum=" << witness.alternating_sum << '\n';
    }
    return 0;
}

int cmd_expand(const std::string& exponent, const std::string& out) {
    const ExponentMatrix e = read_exponent(load_text(exponent));
    const SparseBinaryMatrix h = expand(e);
    save_text(out, write_alist(h));
    std::cout << "wrote " << out << " (" << h.rows() << " x " << h.cols() << ", " << h.ones_count()
              << " ones)\n";
    return 0;
}

int cmd_profile(const std::string& alist, const std::string& exponent, bool as_json, bool quiet) {
    if (alist.empty() && exponent.empty()) {
        throw std::runtime_error("profile: provide --alist or --exponent");
    }
    const SparseBinaryMatrix h =
        !alist.empty() ? read_alist(load_text(alist)) : expand(read_exponent(load_text(exponent)));
    const CodeProfile cp = profile(h);
    if (as_json) {
        json j;
        j["rows"] = h.rows();
        j["cols"] = h.cols();
        j["column_weights"] = hist_to_json(cp.column_weights);
        j["row_weights"] = hist_to_json(cp.row_weights);
        j["designed_rate"] = {{"num", cp.designed_rate.num}, {"den", cp.designed_rate.den}};
        std::cout << j.dump() << '\n';
        return 0;
    }
    if (!quiet) std::cout << "rows=" << h.rows() << " cols=" << h.cols() << '\n';
    std::cout << "column_weights: " << format_hist(cp.column_weights) << '\n';
    std::cout << "row_weights: " << format_hist(cp.row_weights) << '\n';
    std::cout << "designed_rate=" << cp.designed_rate.num << '/' << cp.designed_rate.den << '\n';
    return 0;
}

int cmd_simulate(const std::string& alist, const std::string& snr, int max_iter,
                 std::uint64_t min_errors, std::uint64_t max_frames, std::uint64_t seed, int threads,
                 const std::string& out) {
    const SparseBinaryMatrix h = read_alist(load_text(alist));
    const CodeProfile cp = profile(h);
    const double rate = cp.designed_rate.value();
    std::vector<ChannelPoint> points;
    std::uint64_t index = 0;
    for (double db : parse_snr_range(snr)) {
        points.push_back(ChannelPoint::from_eb_n0(db, rate, seed ^ mix64(index++)));
    }
    const SimResult result = run_ber(h, points, {min_errors, max_frames}, max_iter, threads);
    save_text(out, write_csv(result));
    for (const auto& pr : result) {
        std::cout << "eb_n0_db=" << pr.point.eb_n0_db << " frames=" << pr.frames << " ber=" << pr.ber
                  << " fer=" << pr.fer;
        if (auto w = pr.min_wrong_weight()) std::cout << " min_wrong_codeword_weight=" << *w;
        std::cout << '\n';
    }
    std::cout << "wrote " << out << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition-and-splicing QC-LDPC construction, girth analysis and BER simulation"};
    app.require_subcommand(1);

    // gen-base
    std::string base_kind = "gcd";
    int base_p = 64;
    int base_l = 8;
    std::string base_out = "base.exp";
    auto* gen_base = app.add_subcommand("gen-base", "generate a base exponent matrix");
    gen_base->add_option("kind", base_kind, "base construction (gcd)");
    gen_base->add_option("--p", base_p, "lift size P")->required();
    gen_base->add_option("--l", base_l, "row length L")->required();
    gen_base->add_option("--out", base_out, "output file");

    // gen-mask
    std::string mask_kind;
    int mask_m = 4;
    int mask_n = 8;
    std::string mask_out = "m0.mask";
    auto* gen_mask = app.add_subcommand("gen-mask", "generate a primary partition mask");
    gen_mask->add_option("kind", mask_kind, "partition (d, t, h)")->required();
    gen_mask->add_option("--m", mask_m, "mask rows")->required();
    gen_mask->add_option("--n", mask_n, "mask cols")->required();
    gen_mask->add_option("--out", mask_out, "output file");

    // gen-latin
    std::string latin_kind = "circulant";
    int latin_n = 2;
    std::string latin_out = "a.latin";
    auto* gen_latin = app.add_subcommand("gen-latin", "generate a Latin square");
    gen_latin->add_option("kind", latin_kind, "square kind (circulant)");
    gen_latin->add_option("--n", latin_n, "order N")->required();
    gen_latin->add_option("--out", latin_out, "output file");

    // splice
    std::string splice_base = "base.exp";
    std::vector<std::string> splice_masks = {"m0.mask"};
    int splice_n = 2;
    std::string splice_latin = "circulant";
    std::string splice_out = "compound.exp";
    auto* splice = app.add_subcommand("splice", "compose the compound exponent matrix");
    splice->add_option("--base", splice_base, "base exponent matrix file");
    splice->add_option("--mask", splice_masks,
                       "mask file; one file means {M0, complement, zeros...}, several files are "
                       "taken as the full mask set");
    splice->add_option("--n", splice_n, "number of masks / Latin order")->required();
    splice->add_option("--latin", splice_latin, "'circulant' or a Latin square file");
    splice->add_option("--out", splice_out, "output file");

    // girth
    std::string girth_exp = "compound.exp";
    std::string girth_alist;
    int girth_cap = 12;
    bool girth_witness = false;
    bool girth_json = false;
    bool girth_quiet = false;
    auto* girth = app.add_subcommand("girth", "exact girth of an exponent matrix or alist");
    girth->add_option("--exponent", girth_exp, "exponent matrix file");
    girth->add_option("--alist", girth_alist, "alist file (graph search instead)");
    girth->add_option("--cap", girth_cap, "even search cap");
    girth->add_flag("--witness", girth_witness, "print a shortest-cycle witness");
    girth->add_flag("--json", girth_json, "machine-readable output");
    girth->add_flag("--quiet", girth_quiet, "suppress the witness dump");

    // expand
    std::string expand_exp = "compound.exp";
    std::string expand_out = "expanded.alist";
    auto* expand_cmd = app.add_subcommand("expand", "lift an exponent matrix to an alist");
    expand_cmd->add_option("--exponent", expand_exp, "exponent matrix file");
    expand_cmd->add_option("--out", expand_out, "output file");

    // profile
    std::string profile_alist;
    std::string profile_exp;
    bool profile_json = false;
    bool profile_quiet = false;
    auto* profile_cmd = app.add_subcommand("profile", "weight histograms and designed rate");
    profile_cmd->add_option("--alist", profile_alist, "alist file");
    profile_cmd->add_option("--exponent", profile_exp, "exponent matrix file (expanded first)");
    profile_cmd->add_flag("--json", profile_json, "machine-readable output");
    profile_cmd->add_flag("--quiet", profile_quiet, "omit the dimensions line");

    // simulate
    std::string sim_alist;
    std::string sim_snr = "1.0:0.5:4.0";
    int sim_max_iter = 50;
    std::uint64_t sim_min_errors = 100;
    std::uint64_t sim_max_frames = 10'000'000;
    std::uint64_t sim_seed = 1;
    int sim_threads = 1;
    std::string sim_out = "results.csv";
    auto* simulate = app.add_subcommand("simulate", "BPSK/AWGN sum-product BER sweep");
    simulate->add_option("--alist", sim_alist, "alist file")->required();
    simulate->add_option("--snr", sim_snr, "Eb/N0 in dB: value or start:step:stop");
    simulate->add_option("--max-iter", sim_max_iter, "decoder iterations");
    simulate->add_option("--min-errors", sim_min_errors, "frame errors per point before stopping");
    simulate->add_option("--max-frames", sim_max_frames, "frame budget per point");
    simulate->add_option("--seed", sim_seed, "base RNG seed");
    simulate->add_option("--threads", sim_threads, "worker count (results are thread-invariant)");
    simulate->add_option("--out", sim_out, "output CSV file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_base->parsed()) return cmd_gen_base(base_kind, base_p, base_l, base_out);
        if (gen_mask->parsed()) return cmd_gen_mask(mask_kind, mask_m, mask_n, mask_out);
        if (gen_latin->parsed()) return cmd_gen_latin(latin_kind, latin_n, latin_out);
        if (splice->parsed()) return cmd_splice(splice_base, splice_masks, splice_n, splice_latin, splice_out);
        if (girth->parsed())
            return cmd_girth(girth_exp, girth_alist, girth_cap, girth_witness, girth_json, girth_quiet);
        if (expand_cmd->parsed()) return cmd_expand(expand_exp, expand_out);
        if (profile_cmd->parsed())
            return cmd_profile(profile_alist, profile_exp, profile_json, profile_quiet);
        if (simulate->parsed())
            return cmd_simulate(sim_alist, sim_snr, sim_max_iter, sim_min_errors, sim_max_frames,
                                sim_seed, sim_threads, sim_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

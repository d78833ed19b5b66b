#include "cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfkit/cfe.hpp"
#include "cfkit/dynamics.hpp"
#include "cfkit/kronecker.hpp"
#include "cfkit/numeration.hpp"
#include "cfkit/oracle.hpp"
#include "cfkit/signed_numeration.hpp"

namespace cfkit::cli {

using nlohmann::json;

ExactReal parse_real_argument(const std::string& text) {
    if (text == "golden")
        return ExactReal::quadratic(Rat(-1, 2), Rat(1, 2), 5); // (-1+sqrt(5))/2
    if (text == "sqrt2m1") return ExactReal::quadratic(-1, 1, 2);
    if (text == "sqrt3m1") return ExactReal::quadratic(-1, 1, 3);
    return ExactReal::parse(text);
}

namespace {

struct Output {
    std::ostream& out;
    bool as_json = false;
    json j;

    void emit_text(const std::string& text) {
        if (!as_json) out << text << "\n";
    }
    void finish(int oracle_state) {
        if (!as_json) return;
        if (oracle_state < 0)
            j["oracle_match"] = nullptr;
        else
            j["oracle_match"] = oracle_state > 0;
        if (!j.contains("witness")) j["witness"] = nullptr;
        out << j.dump() << "\n";
    }
};

// oracle_state: -1 not checked, 0 mismatch, 1 match
void report_oracle(Output& o, int state) {
    if (state >= 0 && !o.as_json) o.out << "oracle: " << (state > 0 ? "MATCH" : "MISMATCH") << "\n";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

json digits_json(const std::vector<Int>& digits) {
    json arr = json::array();
    for (auto& d : digits) arr.push_back(d.str());
    return arr;
}

int run_cfe(const std::string& xs, long digits_cap, bool use_oracle, Output& o) {
    ExactReal x = parse_real_argument(xs);
    o.j["query"] = {{"cmd", "cfe"}, {"x", x.str()}};
    int oracle_state = -1;
    if (x.is_rational()) {
        std::vector<Int> digits = cfe_of(x);
        o.emit_text(format_cfe(digits));
        o.j["result"] = {{"digits", digits_json(digits)}, {"truncated", false}};
        if (use_oracle) oracle_state = cfe_value(digits) == x ? 1 : 0;
    } else {
        if (digits_cap <= 0)
            throw DomainError("irrational expansion: pass --digits K to truncate explicitly");
        CfeStream s(x);
        std::vector<Int> digits;
        for (long k = 0; k < digits_cap; ++k) digits.push_back(s.digit(static_cast<std::size_t>(k)).value());
        o.emit_text(format_cfe(digits) + "...");
        o.j["result"] = {{"digits", digits_json(digits)}, {"truncated", true}};
    }
    report_oracle(o, oracle_state);
    o.finish(oracle_state);
    return 0;
}

int run_value(const std::string& cfe_text, bool use_oracle, Output& o) {
    std::vector<Int> digits = parse_cfe(cfe_text);
    ExactReal v = cfe_value(digits);
    o.j["query"] = {{"cmd", "value"}, {"cfe", format_cfe(digits)}};
    o.emit_text(v.str());
    o.j["result"] = {{"value", v.str()}};
    int oracle_state = -1;
    if (use_oracle && v.is_rational()) oracle_state = cfe_of(v) == digits ? 1 : 0;
    report_oracle(o, oracle_state);
    o.finish(oracle_state);
    return 0;
}

// Rank of a word among the RLO-sorted admissible words of a small
// rational base; the independent route for encode/decode checks.
int oracle_word_rank(const Alpha& alpha, const DigitWord& w, const Int& n) {
    if (!alpha.rational() || alpha.value().denominator() > 10000) return -1;
    auto words = oracle::enumerate_admissible(alpha.value());
    std::vector<Int> mat;
    long r = *alpha.depth();
    for (long k = 1; k <= r; ++k) mat.push_back(w.digit(alpha, k));
    Int rank = 0;
    for (auto& cand : words) {
        if (cand == mat) break;
        ++rank;
    }
    Int expect = n >= 0 ? n : n + alpha.grid_size();
    return rank == expect ? 1 : 0;
}

int run_encode(const std::string& alpha_s, std::optional<std::string> int_s,
               std::optional<std::string> real_s, long digits_cap, bool use_oracle, Output& o) {
    Alpha alpha(parse_real_argument(alpha_s));
    int oracle_state = -1;
    if (int_s) {
        Int n(*int_s);
        DigitWord w = psi_signed_inv(alpha, n);
        o.j["query"] = {{"cmd", "encode"}, {"alpha", alpha.value().str()}, {"int", n.str()}};
        o.emit_text(w.str());
        o.j["result"] = {{"word", w.str()}};
        if (use_oracle) oracle_state = oracle_word_rank(alpha, w, n);
    } else if (real_s) {
        ExactReal beta = parse_real_argument(*real_s);
        o.j["query"] = {{"cmd", "encode"}, {"alpha", alpha.value().str()}, {"real", beta.str()}};
        DigitStream s = lambda_inv(alpha, beta);
        long cap = digits_cap > 0 ? digits_cap : 64;
        for (long k = 0; k < cap && !s.terminated(); ++k) s.next();
        if (s.terminated()) {
            DigitWord w = s.to_word();
            o.emit_text(w.str());
            o.j["result"] = {{"word", w.str()}, {"terminated", true}};
            if (use_oracle) oracle_state = lambda(alpha, w) == beta ? 1 : 0;
        } else {
            if (digits_cap <= 0)
                throw DomainError("infinite digit stream: pass --digits K to truncate explicitly");
            std::vector<std::string> parts;
            for (auto& d : s.produced()) parts.push_back(d.str());
            o.emit_text("(" + join(parts, ",") + ")|trunc");
            o.j["result"] = {{"digits", digits_json(s.produced())}, {"terminated", false}};
        }
    } else {
        throw DomainError("encode needs --int or --real");
    }
    report_oracle(o, oracle_state);
    o.finish(oracle_state);
    return 0;
}

int run_decode(const std::string& alpha_s, const std::string& word_s, bool use_oracle, Output& o) {
    Alpha alpha(parse_real_argument(alpha_s));
    DigitWord w = DigitWord::parse(word_s);
    Int n = psi_signed(alpha, w);
    ExactReal value = lambda(alpha, w);
    o.j["query"] = {{"cmd", "decode"}, {"alpha", alpha.value().str()}, {"word", w.str()}};
    o.emit_text("n = " + n.str());
    o.emit_text("value = " + value.str());
    o.j["result"] = {{"n", n.str()}, {"value", value.str()}};
    int oracle_state = -1;
    if (use_oracle) {
        // Independent check: the value must be the fractional part of n*alpha.
        ExactReal expected = (ExactReal(n) * alpha.value()).frac();
        oracle_state = expected == value ? 1 : 0;
    }
    report_oracle(o, oracle_state);
    o.finish(oracle_state);
    return 0;
}

int run_complement(const std::string& alpha_s, const std::string& word_s, bool use_oracle,
                   Output& o) {
    Alpha alpha(parse_real_argument(alpha_s));
    DigitWord w = DigitWord::parse(word_s);
    DigitWord c = cfe_complement(alpha, w);
    o.j["query"] = {{"cmd", "complement"}, {"alpha", alpha.value().str()}, {"word", w.str()}};
    o.emit_text(c.str());
    o.j["result"] = {{"word", c.str()}};
    int oracle_state = -1;
    if (use_oracle)
        oracle_state = (lambda(alpha, c) == ExactReal(1) - lambda(alpha, w)) ? 1 : 0;
    report_oracle(o, oracle_state);
    o.finish(oracle_state);
    return 0;
}

int run_three_distance(const std::string& alpha_s, long n_points, bool use_oracle, Output& o) {
    ExactReal alpha = parse_real_argument(alpha_s);
    ThreeDistanceResult r = three_distance(alpha, n_points);
    o.j["query"] = {{"cmd", "three-distance"}, {"alpha", alpha.str()}, {"n", n_points}};
    json spectrum = json::array();
    for (auto& [len, cnt] : r.spectrum.items) {
        o.emit_text(len.str() + " x " + std::to_string(cnt));
        spectrum.push_back({{"length", len.str()}, {"count", cnt}});
    }
    o.emit_text("formula: " + std::string(r.matches ? "match" : "MISMATCH"));
    json predicted = json::array();
    for (auto& v : r.predicted) predicted.push_back(v.str());
    o.j["result"] = {{"spectrum", spectrum}, {"formula_match", r.matches}};
    o.j["witness"] = {{"s", r.s},
                      {"i", r.i.str()},
                      {"two_value_boundary", r.two_value_boundary},
                      {"predicted", predicted}};
    int oracle_state = -1;
    if (use_oracle) {
        auto ref = oracle::gaps(alpha, n_points);
        oracle_state = (ref.size() == r.spectrum.items.size()) ? 1 : 0;
        for (std::size_t i = 0; oracle_state == 1 && i < ref.size(); ++i)
            if (!(ref[i].first == r.spectrum.items[i].first && ref[i].second == r.spectrum.items[i].second))
                oracle_state = 0;
    }
    report_oracle(o, oracle_state);
    o.finish(oracle_state);
    return 0;
}

int run_horizon(const std::string& alpha_s, const std::string& alpha2_s, bool use_oracle,
                Output& o) {
    ExactReal a1 = parse_real_argument(alpha_s);
    ExactReal a2 = parse_real_argument(alpha2_s);
    Int h = floors_match_horizon(a1, a2);
    o.j["query"] = {{"cmd", "horizon"}, {"alpha", a1.str()}, {"alpha2", a2.str()}};
    o.emit_text(h.str());
    o.j["result"] = {{"horizon", h.str()}};
    int oracle_state = -1;
    if (use_oracle) oracle_state = oracle::floor_horizon(a1, a2) == h ? 1 : 0;
    report_oracle(o, oracle_state);
    o.finish(oracle_state);
    return 0;
}

int run_best_approx(const std::string& alpha_s, const std::string& beta_s, const std::string& side,
                    long n_max, bool use_oracle, Output& o) {
    Alpha alpha(parse_real_argument(alpha_s));
    ExactReal beta = parse_real_argument(beta_s);
    if (side != "left" && side != "right") throw DomainError("side must be left or right");
    Side s = side == "left" ? Side::Left : Side::Right;
    std::vector<Int> ns = best_sided_alpha_approximations(alpha, beta, s, Int(n_max));
    o.j["query"] = {{"cmd", "best-approx"},
                    {"alpha", alpha.value().str()},
                    {"beta", beta.str()},
                    {"side", side},
                    {"nmax", n_max}};
    std::vector<std::string> parts;
    for (auto& n : ns) parts.push_back(n.str());
    o.emit_text(join(parts, " "));
    o.j["result"] = {{"indices", digits_json(ns)}};
    int oracle_state = -1;
    if (use_oracle)
        oracle_state = oracle::records(alpha.value(), beta, s == Side::Right, n_max) == ns ? 1 : 0;
    report_oracle(o, oracle_state);
    o.finish(oracle_state);
    return 0;
}

int run_count(const std::string& alpha_s, const std::string& beta_s, const std::string& nu_s,
              bool leq, bool use_oracle, Output& o) {
    Alpha alpha(parse_real_argument(alpha_s));
    ExactReal beta = parse_real_argument(beta_s);
    Int nu(nu_s);
    o.j["query"] = {{"cmd", "count"},
                    {"alpha", alpha.value().str()},
                    {"beta", beta.str()},
                    {"nu", nu.str()},
                    {"leq", leq}};
    int oracle_state = -1;
    if (leq) {
        Int c = count_below_or_equal(alpha, beta, nu);
        o.emit_text(c.str());
        o.j["result"] = {{"count", c.str()}};
        if (use_oracle)
            oracle_state =
                oracle::count_leq(alpha.value(), beta, static_cast<long>(nu)) == c ? 1 : 0;
    } else {
        CountWitness w;
        Int c = beta.is_zero() ? Int(0) : count_below(alpha, beta, nu, &w);
        o.emit_text(c.str());
        o.j["result"] = {{"count", c.str()}};
        json rows = json::array();
        for (auto& row : w.rows)
            rows.push_back({{"b", row.b.str()},
                            {"nu", row.nu.str()},
                            {"tau", row.tau.str()},
                            {"eps", row.eps},
                            {"eps_prime", row.eps_prime}});
        o.j["witness"] = rows;
        if (use_oracle)
            oracle_state = oracle::count(alpha.value(), beta, static_cast<long>(nu)) == c ? 1 : 0;
    }
    report_oracle(o, oracle_state);
    o.finish(oracle_state);
    return 0;
}

int run_orbit(const std::string& alpha_s, const std::string& start_s, long steps, Output& o) {
    Alpha alpha(parse_real_argument(alpha_s));
    DigitWord w = DigitWord::parse(start_s);
    o.j["query"] = {{"cmd", "orbit"},
                    {"alpha", alpha.value().str()},
                    {"start", w.str()},
                    {"steps", steps}};
    json trace = json::array();
    for (long k = 0; k <= steps; ++k) {
        ExactReal v = lambda(alpha, w);
        std::ostringstream line;
        line << k << " " << w.str() << " " << v.str();
        o.emit_text(line.str());
        trace.push_back({{"step", k}, {"word", w.str()}, {"value", v.str()}});
        if (k < steps) w = germ_successor(alpha, w);
    }
    o.j["result"] = {{"trace", trace}};
    o.finish(-1);
    return 0;
}

int run_skew(const std::string& alpha_s, const std::string& beta_s, long steps, Output& o) {
    ExactReal x = parse_real_argument(alpha_s);
    ExactReal y = parse_real_argument(beta_s);
    o.j["query"] = {{"cmd", "skew"}, {"alpha", x.str()}, {"beta", y.str()}, {"steps", steps}};
    SkewState state{x, y};
    json trace = json::array();
    for (long k = 1; k <= steps; ++k) {
        if (!in_trapezoid(state)) {
            o.emit_text("exhausted");
            break;
        }
        SkewStep step = skew_step(state);
        std::ostringstream line;
        line << k << " (" << step.cfe_digit << "," << step.word_digit << ") " << step.next.x.str()
             << " " << step.next.y.str();
        o.emit_text(line.str());
        trace.push_back({{"step", k},
                         {"cfe_digit", step.cfe_digit.str()},
                         {"word_digit", step.word_digit.str()},
                         {"x", step.next.x.str()},
                         {"y", step.next.y.str()}});
        state = step.next;
    }
    o.j["result"] = {{"trace", trace}};
    o.finish(-1);
    return 0;
}

int run_semiconvergents(const std::string& x_s, const std::string& qmax_s, bool use_oracle,
                        Output& o) {
    ExactReal x = parse_real_argument(x_s);
    Int qmax(qmax_s);
    std::vector<ExactReal> semis = semiconvergents(x, qmax);
    o.j["query"] = {{"cmd", "semiconvergents"}, {"x", x.str()}, {"qmax", qmax.str()}};
    std::vector<std::string> parts;
    for (auto& v : semis) parts.push_back(v.str());
    o.emit_text(join(parts, " "));
    json arr = json::array();
    for (auto& p : parts) arr.push_back(p);
    o.j["result"] = {{"semiconvergents", arr}};
    int oracle_state = -1;
    if (use_oracle) {
        // Every semi-convergent must be a one-sided record.
        auto left = oracle::sided_rational_records(x, false, qmax);
        auto right = oracle::sided_rational_records(x, true, qmax);
        oracle_state = 1;
        for (auto& v : semis) {
            bool found = false;
            for (auto& u : left)
                if (u == v) found = true;
            for (auto& u : right)
                if (u == v) found = true;
            if (!found) oracle_state = 0;
        }
    }
    report_oracle(o, oracle_state);
    o.finish(oracle_state);
    return 0;
}

int run_best_rational(const std::string& t1_s, const std::string& t2_s, bool use_oracle,
                      Output& o) {
    ExactReal t1 = parse_real_argument(t1_s);
    ExactReal t2 = parse_real_argument(t2_s);
    ExactReal best = best_rational_between(t1, t2);
    o.j["query"] = {{"cmd", "best-rational"}, {"theta", t1.str()}, {"theta2", t2.str()}};
    o.emit_text(best.str());
    o.j["result"] = {{"best", best.str()}};
    int oracle_state = -1;
    if (use_oracle) {
        auto ref = oracle::best_rational(t1, t2, best.denominator());
        oracle_state = (ref && *ref == best) ? 1 : 0;
    }
    report_oracle(o, oracle_state);
    o.finish(oracle_state);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact continued-fraction numeration toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    bool use_oracle = false;
    app.add_flag("--json", as_json, "emit JSON on stdout");
    app.add_flag("--oracle", use_oracle, "cross-check against the brute-force oracle");

    std::function<int(Output&)> action;

    // cfe <x> [--digits K]
    auto* cfe_cmd = app.add_subcommand("cfe", "continued fraction expansion of an exact real");
    auto cfe_x = std::make_shared<std::string>();
    auto cfe_digits = std::make_shared<long>(0);
    cfe_cmd->add_option("x", *cfe_x, "exact real")->required();
    cfe_cmd->add_option("--digits", *cfe_digits, "digits to emit for irrational inputs");
    cfe_cmd->callback([&action, cfe_x, cfe_digits, &use_oracle] {
        action = [=, &use_oracle](Output& o) { return run_cfe(*cfe_x, *cfe_digits, use_oracle, o); };
    });

    auto* value_cmd = app.add_subcommand("value", "evaluate a CFE digit list exactly");
    auto value_text = std::make_shared<std::string>();
    value_cmd->add_option("cfe", *value_text, "digit list, e.g. [2,3,1]")->required();
    value_cmd->callback([&action, value_text, &use_oracle] {
        action = [=, &use_oracle](Output& o) { return run_value(*value_text, use_oracle, o); };
    });

    auto* encode_cmd = app.add_subcommand("encode", "digit word of an integer or a real");
    auto enc_alpha = std::make_shared<std::string>();
    auto enc_int = std::make_shared<std::string>();
    auto enc_real = std::make_shared<std::string>();
    auto enc_digits = std::make_shared<long>(0);
    encode_cmd->add_option("--alpha", *enc_alpha, "numeration base in [0,1[")->required();
    auto* enc_int_opt = encode_cmd->add_option("--int", *enc_int, "integer to encode");
    auto* enc_real_opt = encode_cmd->add_option("--real", *enc_real, "real in [0,1[ to encode");
    encode_cmd->add_option("--digits", *enc_digits, "digits for non-terminating streams");
    enc_int_opt->excludes(enc_real_opt);
    encode_cmd->callback([&action, enc_alpha, enc_int, enc_real, enc_digits, enc_int_opt,
                          enc_real_opt, &use_oracle] {
        bool has_int = enc_int_opt->count() > 0;
        bool has_real = enc_real_opt->count() > 0;
        action = [=, &use_oracle](Output& o) {
            return run_encode(*enc_alpha,
                              has_int ? std::optional<std::string>(*enc_int) : std::nullopt,
                              has_real ? std::optional<std::string>(*enc_real) : std::nullopt,
                              *enc_digits, use_oracle, o);
        };
    });

    auto* decode_cmd = app.add_subcommand("decode", "integer and real value of a digit word");
    auto dec_alpha = std::make_shared<std::string>();
    auto dec_word = std::make_shared<std::string>();
    decode_cmd->add_option("--alpha", *dec_alpha, "numeration base")->required();
    decode_cmd->add_option("--word", *dec_word, "digit word, e.g. (1,1,1)|0")->required();
    decode_cmd->callback([&action, dec_alpha, dec_word, &use_oracle] {
        action = [=, &use_oracle](Output& o) {
            return run_decode(*dec_alpha, *dec_word, use_oracle, o);
        };
    });

    auto* comp_cmd = app.add_subcommand("complement", "CFE-complement of a digit word");
    auto comp_alpha = std::make_shared<std::string>();
    auto comp_word = std::make_shared<std::string>();
    comp_cmd->add_option("--alpha", *comp_alpha, "numeration base")->required();
    comp_cmd->add_option("--word", *comp_word, "digit word")->required();
    comp_cmd->callback([&action, comp_alpha, comp_word, &use_oracle] {
        action = [=, &use_oracle](Output& o) {
            return run_complement(*comp_alpha, *comp_word, use_oracle, o);
        };
    });

    auto* td_cmd = app.add_subcommand("three-distance", "gap spectrum of {k alpha}, k < N");
    auto td_alpha = std::make_shared<std::string>();
    auto td_n = std::make_shared<long>(0);
    td_cmd->add_option("--alpha", *td_alpha, "slope")->required();
    td_cmd->add_option("--n", *td_n, "number of points")->required();
    td_cmd->callback([&action, td_alpha, td_n, &use_oracle] {
        action = [=, &use_oracle](Output& o) {
            return run_three_distance(*td_alpha, *td_n, use_oracle, o);
        };
    });

    auto* hz_cmd = app.add_subcommand("horizon", "order-coincidence horizon of two slopes");
    auto hz_a1 = std::make_shared<std::string>();
    auto hz_a2 = std::make_shared<std::string>();
    hz_cmd->add_option("--alpha", *hz_a1, "smaller slope")->required();
    hz_cmd->add_option("--alpha2", *hz_a2, "larger slope")->required();
    hz_cmd->callback([&action, hz_a1, hz_a2, &use_oracle] {
        action = [=, &use_oracle](Output& o) { return run_horizon(*hz_a1, *hz_a2, use_oracle, o); };
    });

    auto* ba_cmd = app.add_subcommand("best-approx", "best one-sided alpha-approximations of beta");
    auto ba_alpha = std::make_shared<std::string>();
    auto ba_beta = std::make_shared<std::string>();
    auto ba_side = std::make_shared<std::string>();
    auto ba_nmax = std::make_shared<long>(0);
    ba_cmd->add_option("--alpha", *ba_alpha, "base")->required();
    ba_cmd->add_option("--beta", *ba_beta, "target in [0,1[")->required();
    ba_cmd->add_option("--side", *ba_side, "left or right")->required();
    ba_cmd->add_option("--nmax", *ba_nmax, "index bound")->required();
    ba_cmd->callback([&action, ba_alpha, ba_beta, ba_side, ba_nmax, &use_oracle] {
        action = [=, &use_oracle](Output& o) {
            return run_best_approx(*ba_alpha, *ba_beta, *ba_side, *ba_nmax, use_oracle, o);
        };
    });

    auto* count_cmd = app.add_subcommand("count", "#{k < nu : {k alpha} < beta}");
    auto ct_alpha = std::make_shared<std::string>();
    auto ct_beta = std::make_shared<std::string>();
    auto ct_nu = std::make_shared<std::string>();
    auto ct_leq = std::make_shared<bool>(false);
    count_cmd->add_option("--alpha", *ct_alpha, "base")->required();
    count_cmd->add_option("--beta", *ct_beta, "threshold in [0,1[")->required();
    count_cmd->add_option("--nu", *ct_nu, "index bound")->required();
    count_cmd->add_flag("--leq", *ct_leq, "count {k alpha} <= beta for k <= nu instead");
    count_cmd->callback([&action, ct_alpha, ct_beta, ct_nu, ct_leq, &use_oracle] {
        action = [=, &use_oracle](Output& o) {
            return run_count(*ct_alpha, *ct_beta, *ct_nu, *ct_leq, use_oracle, o);
        };
    });

    auto* orbit_cmd = app.add_subcommand("orbit", "successor orbit of a digit word");
    auto orb_alpha = std::make_shared<std::string>();
    auto orb_start = std::make_shared<std::string>("()|0");
    auto orb_steps = std::make_shared<long>(10);
    orbit_cmd->add_option("--alpha", *orb_alpha, "base")->required();
    orbit_cmd->add_option("--start", *orb_start, "starting word (default the zero word)");
    orbit_cmd->add_option("--steps", *orb_steps, "number of successor steps");
    orbit_cmd->callback([&action, orb_alpha, orb_start, orb_steps] {
        action = [=](Output& o) { return run_orbit(*orb_alpha, *orb_start, *orb_steps, o); };
    });

    auto* skew_cmd = app.add_subcommand("skew", "skew-product digit generator trace");
    auto sk_alpha = std::make_shared<std::string>();
    auto sk_beta = std::make_shared<std::string>();
    auto sk_steps = std::make_shared<long>(10);
    skew_cmd->add_option("--alpha", *sk_alpha, "x coordinate")->required();
    skew_cmd->add_option("--beta", *sk_beta, "y coordinate")->required();
    skew_cmd->add_option("--steps", *sk_steps, "number of steps");
    skew_cmd->callback([&action, sk_alpha, sk_beta, sk_steps] {
        action = [=](Output& o) { return run_skew(*sk_alpha, *sk_beta, *sk_steps, o); };
    });

    auto* semi_cmd = app.add_subcommand("semiconvergents", "semi-convergents up to a denominator");
    auto sc_x = std::make_shared<std::string>();
    auto sc_qmax = std::make_shared<std::string>();
    semi_cmd->add_option("--x", *sc_x, "real")->required();
    semi_cmd->add_option("--qmax", *sc_qmax, "denominator bound")->required();
    semi_cmd->callback([&action, sc_x, sc_qmax, &use_oracle] {
        action = [=, &use_oracle](Output& o) {
            return run_semiconvergents(*sc_x, *sc_qmax, use_oracle, o);
        };
    });

    auto* br_cmd = app.add_subcommand("best-rational", "minimal-denominator rational between");
    auto br_t1 = std::make_shared<std::string>();
    auto br_t2 = std::make_shared<std::string>();
    br_cmd->add_option("--theta", *br_t1, "first endpoint")->required();
    br_cmd->add_option("--theta2", *br_t2, "second endpoint")->required();
    br_cmd->callback([&action, br_t1, br_t2, &use_oracle] {
        action = [=, &use_oracle](Output& o) {
            return run_best_rational(*br_t1, *br_t2, use_oracle, o);
        };
    });

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    try {
        Output o{out, as_json, json::object()};
        return action(o);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cfkit::cli

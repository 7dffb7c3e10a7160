#include "semigap/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "semigap/boseck.hpp"
#include "semigap/covers.hpp"
#include "semigap/filtration.hpp"
#include "semigap/invariants.hpp"
#include "semigap/semigroup.hpp"

namespace semigap {

namespace {

using nlohmann::json;

Int parse_int(std::string_view text) {
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(text.begin(), text.end(), value);
    if (ec != std::errc() || ptr != text.end())
        throw CLI::ValidationError("expected an integer, got '" + std::string(text) + "'");
    return value;
}

// Comma-separated, no spaces.
std::vector<Int> parse_int_list(const std::string& text) {
    if (text.empty()) throw CLI::ValidationError("empty integer list");
    std::vector<Int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        out.push_back(parse_int(std::string_view(text).substr(start, end - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string join(const std::vector<Int>& values, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

const char* yes_no(bool value) { return value ? "yes" : "no"; }

void emit(std::ostream& out, const std::string& kind, const json& input, const json& result,
          const std::vector<std::string>& warnings, bool as_json,
          const std::string& human) {
    if (as_json) {
        json report;
        report["kind"] = kind;
        report["input"] = input;
        report["result"] = result;
        report["warnings"] = warnings;
        out << report.dump() << "\n";
    } else {
        out << human;
        for (const std::string& w : warnings) out << "warning: " << w << "\n";
    }
}

json semigroup_json(const NumericalSemigroup& h) {
    json j;
    j["generators"] = json_int_array(h.generators());
    j["genus"] = json_int(h.genus());
    j["conductor"] = json_int(h.conductor());
    j["frobenius"] = json_int(h.frobenius());
    j["gaps"] = json_int_array(h.gaps().values());
    j["symmetric"] = h.genus() == 0 ? json(nullptr) : json(h.is_symmetric());
    return j;
}

void describe_semigroup(std::ostream& os, const NumericalSemigroup& h) {
    os << "generators: " << join(h.generators()) << "\n";
    os << "genus: " << h.genus() << "\n";
    os << "conductor: " << h.conductor() << "\n";
    os << "frobenius: " << h.frobenius() << "\n";
    os << "gaps: " << (h.genus() == 0 ? std::string("(none)") : join(h.gaps().values()))
       << "\n";
    os << "symmetric: " << (h.genus() == 0 ? "n/a" : yes_no(h.is_symmetric())) << "\n";
}

int cmd_semigroup(const std::vector<Int>& gens, bool as_json, std::ostream& out,
                  Int size_guard) {
    const auto h = NumericalSemigroup::from_generators(gens, size_guard);
    json input;
    input["gens"] = json_int_array(gens);
    std::ostringstream human;
    describe_semigroup(human, h);
    emit(out, "semigroup", input, semigroup_json(h), {}, as_json, human.str());
    return 0;
}

int cmd_artin_schreier(Int p, Int h, Int m, const std::vector<Int>& base_gaps, bool as_json,
                       std::ostream& out, Int size_guard) {
    const ArtinSchreierCover cover(p, h, m, GapSet(base_gaps), size_guard);
    const LewittesGaps lw = lewittes_gaps(cover);
    const auto semigroup = NumericalSemigroup::from_gaps(lw.gaps, size_guard);

    json input;
    input["p"] = json_int(p);
    input["h"] = json_int(h);
    input["m"] = json_int(m);
    input["base_gaps"] = json_int_array(base_gaps);

    json result;
    result["q"] = json_int(cover.q());
    result["genus"] = json_int(cover.genus());
    result["gaps"] = json_int_array(lw.gaps.values());
    result["semigroup"] = semigroup_json(semigroup);

    std::vector<std::string> warnings;
    if (lw.zero_index_included)
        warnings.push_back(
            "positive base genus: the {m*i + q*h_j} family includes its i=0 term; "
            "starting that union at i=1 would fall short of the Riemann-Hurwitz genus "
            "by the base genus");

    std::ostringstream human;
    human << "q: " << cover.q() << "  (p = " << p << ", h = " << h << ")\n";
    human << "m: " << m << "\n";
    human << "base gaps: "
          << (base_gaps.empty() ? std::string("(none)") : join(base_gaps)) << "\n";
    human << "genus: " << cover.genus() << "\n";
    human << "gaps: " << (lw.gaps.empty() ? std::string("(none)") : join(lw.gaps.values()))
          << "\n";
    human << "semigroup generators: " << join(semigroup.generators()) << "\n";
    emit(out, "artin-schreier", input, result, warnings, as_json, human.str());
    return 0;
}

int cmd_cyclic(Int p, Int n, const std::vector<std::string>& place_args, std::size_t at,
               bool as_json, std::ostream& out, Int size_guard) {
    std::vector<RamifiedPlace> places;
    json input_places = json::array();
    for (const std::string& arg : place_args) {
        RamifiedPlace place{parse_int_list(arg)};
        input_places.push_back(json_int_array(place.lambdas));
        places.push_back(std::move(place));
    }
    const CyclicCoverSpec spec(p, n, std::move(places), size_guard);
    const BoseckTable table = BoseckTable::build(spec);
    if (at >= spec.place_count())
        fail(ErrorCode::PlaceOutOfRange,
             "place index " + std::to_string(at) + " out of range (have " +
                 std::to_string(spec.place_count()) + " places)");

    const GapSet gaps = gap_sequence(table, at);
    const auto semigroup = semigroup_from_gaps(table, at, size_guard);
    const CoverSemigroup cover = cyclic_semigroup(spec, at, size_guard);

    std::vector<bool> symmetric(spec.place_count());
    for (std::size_t i = 0; i < spec.place_count(); ++i)
        symmetric[i] = is_symmetric_at(table, i);

    json input;
    input["p"] = json_int(p);
    input["n"] = json_int(n);
    input["places"] = input_places;
    input["at"] = json_int(static_cast<Int>(at));

    json result;
    result["p_n"] = json_int(spec.pn());
    result["genus"] = json_int(table.genus());
    result["deltas"] = json_int_array(table.deltas());
    result["gamma"] = json_int_array(table.gamma());
    result["nu"] = json::array();
    result["rho"] = json::array();
    for (std::size_t i = 0; i < spec.place_count(); ++i) {
        result["nu"].push_back(json_int_array(table.nu()[i]));
        result["rho"].push_back(json_int_array(table.rho()[i]));
    }
    result["gaps"] = json_int_array(gaps.values());
    result["max_gap"] = gaps.empty() ? json(nullptr) : json_int(gaps.max_gap());
    result["symmetric"] = json::array();
    for (bool s : symmetric) result["symmetric"].push_back(s);
    result["semigroup"] = semigroup_json(semigroup);
    result["cover_generators"] = json_int_array(cover.semigroup.generators());
    result["cover_exact"] = cover.exactness == Exactness::Exact;

    std::vector<std::string> warnings;
    if (cover.exactness == Exactness::UpperBound)
        warnings.push_back(
            "UPPER-BOUND: with several ramified places the generator form "
            "<p^n, p^(n-1)*l1, ..., ln> only contains the true semigroup");

    std::ostringstream human;
    human << "p: " << p << "  n: " << n << "  p^n: " << spec.pn() << "\n";
    human << "genus: " << table.genus() << "\n";
    for (std::size_t i = 0; i < spec.place_count(); ++i)
        human << "place " << i << ": lambda = (" << join(spec.places()[i].lambdas, ",")
              << ")  delta = " << table.deltas()[i] << "\n";
    human << "  k Gamma";
    for (std::size_t i = 0; i < spec.place_count(); ++i)
        human << "  nu[" << i << "] rho[" << i << "]";
    human << "\n";
    for (Int k = 0; k < spec.pn(); ++k) {
        human << std::setw(3) << k << std::setw(6) << table.gamma()[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < spec.place_count(); ++i)
            human << std::setw(7) << table.nu()[i][static_cast<std::size_t>(k)] << std::setw(8)
                  << table.rho()[i][static_cast<std::size_t>(k)];
        human << "\n";
    }
    human << "gaps at place " << at << ": "
          << (gaps.empty() ? std::string("(none)") : join(gaps.values())) << "\n";
    if (!gaps.empty()) human << "max gap: " << gaps.max_gap() << "\n";
    for (std::size_t i = 0; i < spec.place_count(); ++i)
        human << "symmetric at place " << i << ": " << yes_no(symmetric[i]) << "\n";
    human << "semigroup generators: " << join(semigroup.generators()) << "\n";
    human << "cover semigroup <" << join(cover.semigroup.generators(), ",") << "> ("
          << (cover.exactness == Exactness::Exact ? "exact" : "upper bound") << ")\n";
    emit(out, "cyclic", input, result, warnings, as_json, human.str());
    return 0;
}

int cmd_filtration(const std::vector<Int>& poles, bool as_json, std::ostream& out) {
    const FiltrationReport report = jumps(std::span<const Int>(poles));

    json input;
    input["poles"] = json_int_array(poles);

    json result;
    result["pole_numbers"] = json_int_array(report.pole_numbers);
    result["jump_indices"] = json::array();
    for (std::size_t i : report.jump_indices)
        result["jump_indices"].push_back(json_int(static_cast<Int>(i)));
    result["generators"] = json_int_array(report.generators);

    std::ostringstream human;
    human << "pole numbers: " << join(report.pole_numbers) << "\n";
    human << "jumps: " << report.jump_indices.size() << "\n";
    for (std::size_t j = 0; j < report.jump_indices.size(); ++j)
        human << "  at index " << report.jump_indices[j] << " (new generator "
              << report.generators[j] << ")\n";
    emit(out, "filtration", input, result, {}, as_json, human.str());
    return 0;
}

int cmd_check(const std::vector<Int>& gens, Int p, std::optional<Int> q,
              std::optional<Int> nilpotency, std::optional<Int> points, bool as_json,
              std::ostream& out, Int size_guard) {
    CurveCheckInput in{NumericalSemigroup::from_generators(gens, size_guard), p, q,
                       nilpotency, points};
    const CurveCheckReport report = check_curve(in);

    json input;
    input["gens"] = json_int_array(gens);
    input["p"] = json_int(p);
    if (q) input["q"] = json_int(*q);
    if (nilpotency) input["nilpotency"] = json_int(*nilpotency);
    if (points) input["points"] = json_int(*points);

    json result;
    result["genus"] = json_int(report.genus);
    result["frobenius"] = json_int(report.frobenius);
    result["symmetric"] = report.symmetric ? json(*report.symmetric) : json(nullptr);

    std::ostringstream human;
    human << "genus: " << report.genus << "\n";
    human << "frobenius: " << report.frobenius << "\n";
    human << "symmetric: " << (report.symmetric ? yes_no(*report.symmetric) : "n/a") << "\n";

    if (report.nilpotency) {
        const NilpotencyReport& nil = *report.nilpotency;
        json jn;
        jn["ell"] = json_int(nil.ell);
        jn["rank_lower_bounds"] = json_int_array(nil.divisible_gap_counts);
        jn["zero_hasse_witt_consistent"] = nil.zero_hasse_witt;
        jn["genus_bound"] = json_int(nil.genus_bound);
        jn["genus_within_bound"] = nil.genus_within_bound;
        jn["non_classical"] = nil.non_classical == NonClassical::Forced ? "forced"
                              : nil.non_classical == NonClassical::Inconclusive
                                  ? "inconclusive"
                                  : "not-forced";
        result["nilpotency"] = jn;

        for (Int r = 1; r <= nil.ell; ++r)
            human << "gaps divisible by " << p << "^" << r << ": "
                  << nil.divisible_gap_counts[static_cast<std::size_t>(r - 1)]
                  << " (lower bound for rank of iterate " << r << ")\n";
        human << "zero Hasse-Witt consistent: " << yes_no(nil.zero_hasse_witt) << "\n";
        human << "nilpotency genus bound: " << nil.genus_bound << " ("
              << (nil.genus_within_bound ? "respected" : "violated") << ")\n";
        human << "non-classical: "
              << (nil.non_classical == NonClassical::Forced ? "forced"
                  : nil.non_classical == NonClassical::Inconclusive ? "inconclusive"
                                                                    : "not forced")
              << "\n";
    }
    if (report.maximality) {
        const MaximalityReport& max = *report.maximality;
        json jm;
        jm["q"] = json_int(max.q);
        jm["point_bound"] = json_int(max.point_bound);
        jm["genus_bound"] = json_int(max.genus_bound);
        jm["rational_point_check"] = max.has_q_and_q_plus_one;
        jm["genus_within_bound"] = max.genus_within_bound;
        if (max.points_within_bound) jm["points_within_bound"] = *max.points_within_bound;
        jm["consistent"] = max.consistent;
        result["maximality"] = jm;

        human << "point bound (at multiplicity): " << max.point_bound << "\n";
        human << "genus bound (at multiplicity): " << max.genus_bound << " ("
              << (max.genus_within_bound ? "respected" : "violated") << ")\n";
        human << "q and q+1 pole numbers: " << yes_no(max.has_q_and_q_plus_one) << "\n";
        if (max.points_within_bound)
            human << "claimed points within bound: " << yes_no(*max.points_within_bound)
                  << "\n";
        human << "consistent with maximality: " << yes_no(max.consistent) << "\n";
    }
    emit(out, "check", input, result, {}, as_json, human.str());
    return 0;
}

}  // namespace

json json_int(Int value) {
    constexpr Int kSafe = Int{1} << 53;
    if (value > -kSafe && value < kSafe) return json(value);
    return json(std::to_string(value));
}

json json_int_array(const std::vector<Int>& values) {
    json arr = json::array();
    for (Int v : values) arr.push_back(json_int(v));
    return arr;
}

Int resolve_size_guard() {
    const char* raw = std::getenv("SIZE_GUARD");
    if (raw == nullptr) return kDefaultSizeGuard;
    Int value = 0;
    const std::string text(raw);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
        return kDefaultSizeGuard;
    return value;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            Int size_guard) {
    CLI::App app{"Weierstrass semigroups and gap sequences of wildly ramified covers"};
    app.name("semigap");
    app.require_subcommand(1);
    // --h is a real option below, so help keeps only its long form.
    app.set_help_flag("--help", "print help and exit");

    std::string gens_arg, poles_arg, base_gaps_arg;
    std::vector<std::string> place_args;
    Int p = 0, h = 1, n = 1, m = 0;
    Int at = 0;
    Int q_arg = 0, nil_arg = 0, points_arg = 0;
    bool json_sem = false, json_as = false, json_cyc = false, json_fil = false,
         json_chk = false;

    const auto add_subcommand = [&app](const std::string& cmd, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(cmd, desc);
        sub->set_help_flag("--help", "print help and exit");
        return sub;
    };

    CLI::App* sem = add_subcommand(
        "semigroup", "gaps, genus, Frobenius number and symmetry of <gens>");
    sem->add_option("--gens", gens_arg, "comma-separated generators")->required();
    sem->add_flag("--json", json_sem, "machine-readable output");

    CLI::App* as = add_subcommand(
        "artin-schreier", "gap set of y^(p^h) - y = G with pole order m");
    as->add_option("--p", p, "characteristic (prime)")->required();
    as->add_option("--h", h, "extension exponent, degree is p^h")->required();
    as->add_option("--m", m, "pole order of G, coprime to p")->required();
    as->add_option("--base-gaps", base_gaps_arg, "gap set of the base place");
    as->add_flag("--json", json_as, "machine-readable output");

    CLI::App* cyc = add_subcommand(
        "cyclic", "Boseck table and gap sequences of a cyclic p^n cover");
    cyc->add_option("--p", p, "characteristic (prime)")->required();
    cyc->add_option("--n", n, "tower height, degree is p^n")->required();
    cyc->add_option("--place", place_args, "jump values l1,...,ln (repeatable)")
        ->required();
    cyc->add_option("--at", at, "place index to report (default 0)");
    cyc->add_flag("--json", json_cyc, "machine-readable output");

    CLI::App* fil = add_subcommand(
        "filtration", "generator events along a pole-number sequence");
    fil->add_option("--poles", poles_arg, "comma-separated pole numbers, starting at 0")
        ->required();
    fil->add_flag("--json", json_fil, "machine-readable output");

    CLI::App* chk = add_subcommand(
        "check", "Hasse-Witt and maximal-curve consistency screening");
    chk->add_option("--gens", gens_arg, "comma-separated generators")->required();
    chk->add_option("--p", p, "characteristic (prime)")->required();
    CLI::Option* q_opt = chk->add_option("--q", q_arg, "field parameter, a power of p");
    CLI::Option* nil_opt =
        chk->add_option("--nilpotency", nil_arg, "claimed Cartier nilpotency rank");
    CLI::Option* pts_opt =
        chk->add_option("--points", points_arg, "claimed number of rational points");
    chk->add_flag("--json", json_chk, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));

        if (sem->parsed())
            return cmd_semigroup(parse_int_list(gens_arg), json_sem, out, size_guard);
        if (as->parsed()) {
            std::vector<Int> base;
            if (!base_gaps_arg.empty()) base = parse_int_list(base_gaps_arg);
            return cmd_artin_schreier(p, h, m, base, json_as, out, size_guard);
        }
        if (cyc->parsed()) {
            if (at < 0) fail(ErrorCode::PlaceOutOfRange, "place index must be >= 0");
            return cmd_cyclic(p, n, place_args, static_cast<std::size_t>(at), json_cyc, out,
                              size_guard);
        }
        if (fil->parsed()) return cmd_filtration(parse_int_list(poles_arg), json_fil, out);
        if (chk->parsed()) {
            std::optional<Int> q, nil, points;
            if (q_opt->count() > 0) q = q_arg;
            if (nil_opt->count() > 0) nil = nil_arg;
            if (pts_opt->count() > 0) points = points_arg;
            return cmd_check(parse_int_list(gens_arg), p, q, nil, points, json_chk, out,
                             size_guard);
        }
        return 2;  // unreachable: require_subcommand(1)
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << name(e.code()) << ": " << e.what() << "\n";
        return 1;
    }
}

}  // namespace semigap

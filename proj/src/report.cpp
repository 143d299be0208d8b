#include "abtaxon/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "abtaxon/parser.hpp"
#include "abtaxon/version.hpp"

namespace abtaxon {

namespace {

using Json = nlohmann::ordered_json;

Json verdict_json(const Verdict& v) {
    return Json{{"value", verdict_value_text(v.value)},
                {"citation", citation_id(v.citation)},
                {"detail", v.detail}};
}

template <typename T, typename Fn>
Json prime_map_json(const std::map<std::uint64_t, T>& m, Fn&& render_value) {
    Json out = Json::object();
    for (const auto& [p, v] : m) out[std::to_string(p)] = render_value(v);
    return out;
}

Json invariants_json(const InvariantProfile& prof) {
    Json inv = Json::object();
    inv["r0"] = prof.r0.str();
    inv["rp"] = prime_map_json(prof.rp, [](const Cardinal& c) { return c.str(); });
    inv["divisibleRationalRank"] = prof.divisible_rational_rank.str();
    inv["pruferRanks"] = prime_map_json(prof.prufer_ranks, [](const Cardinal& c) { return c.str(); });
    inv["isTorsion"] = prof.is_torsion;
    inv["isTorsionFree"] = prof.is_torsion_free;
    inv["isReduced"] = prof.is_reduced;
    inv["isElementary"] = prof.is_elementary;
    inv["boundedAt"] = prime_map_json(prof.bounded_at, [](bool b) { return b; });
    inv["pShapeElemPlusFinite"] =
        prime_map_json(prof.p_shape_elem_plus_finite, [](bool b) { return b; });
    inv["propertyP"] = prof.property_p;
    Json qc = Json::object();
    qc["everyPrime"] = prof.quasi_cyclic_images.every_prime;
    Json primes = Json::array();
    for (std::uint64_t p : prof.quasi_cyclic_images.primes) primes.push_back(p);
    qc["primes"] = primes;
    inv["quasiCyclicImagePrimes"] = qc;
    return inv;
}

}  // namespace

ReportDocument make_report(const std::string& input_text, const GroupExpr& g,
                           const ClassifyOptions& opts, bool with_decomposition) {
    ReportDocument doc;
    doc.input_text = input_text;
    doc.canonical_form = render(g);
    doc.report = explain(g, opts);
    doc.invariants = doc.report.profile;
    if (with_decomposition) doc.decomposition = extract_elementary_plus_bassian(g);
    doc.tool_version = kToolVersion;
    doc.strictness_flag = opts.strict_paper;
    return doc;
}

std::string to_json(const ReportDocument& doc) {
    Json j = Json::object();
    j["inputText"] = doc.input_text;
    j["canonicalForm"] = doc.canonical_form;
    j["invariants"] = invariants_json(doc.invariants);
    Json verdicts = Json::object();
    verdicts["bassian"] = verdict_json(doc.report.bassian);
    verdicts["hereditarilyBassian"] = verdict_json(doc.report.hereditarily_bassian);
    verdicts["hereditarilyHopfian"] = verdict_json(doc.report.hereditarily_hopfian);
    verdicts["nearlyBassian"] = verdict_json(doc.report.nearly_bassian);
    verdicts["superBassian"] = verdict_json(doc.report.super_bassian);
    verdicts["generalizedBassian"] = verdict_json(doc.report.generalized_bassian);
    verdicts["nearlyGeneralizedBassian"] = verdict_json(doc.report.nearly_generalized_bassian);
    j["verdicts"] = verdicts;
    if (doc.decomposition) {
        Json d = Json::object();
        d["elementary"] = render(doc.decomposition->elementary);
        d["bassian"] = render(doc.decomposition->bassian);
        j["decomposition"] = d;
    }
    j["toolVersion"] = doc.tool_version;
    j["strictnessFlag"] = doc.strictness_flag;
    return j.dump(2) + "\n";
}

namespace {

std::string bool_text(bool b) { return b ? "yes" : "no"; }

template <typename T, typename Fn>
std::string prime_map_text(const std::map<std::uint64_t, T>& m, Fn&& render_value) {
    if (m.empty()) return "-";
    std::string s;
    bool first = true;
    for (const auto& [p, v] : m) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(p) + " -> " + render_value(v);
    }
    return s;
}

void verdict_line(std::ostringstream& os, const char* label, const Verdict& v) {
    os << "  " << std::left << std::setw(28) << label << std::setw(9)
       << verdict_value_text(v.value) << std::setw(26) << citation_id(v.citation) << v.detail
       << "\n";
}

}  // namespace

std::string to_text(const ReportDocument& doc) {
    std::ostringstream os;
    os << "input:     " << doc.input_text << "\n";
    os << "canonical: " << doc.canonical_form << "\n\n";

    const InvariantProfile& p = doc.invariants;
    os << "invariants\n";
    auto field = [&](const char* label, const std::string& value) {
        os << "  " << std::left << std::setw(24) << label << value << "\n";
    };
    field("r0", p.r0.str());
    field("rp", prime_map_text(p.rp, [](const Cardinal& c) { return c.str(); }));
    field("divisible Q-rank", p.divisible_rational_rank.str());
    field("prufer ranks", prime_map_text(p.prufer_ranks, [](const Cardinal& c) { return c.str(); }));
    field("torsion", bool_text(p.is_torsion));
    field("torsion-free", bool_text(p.is_torsion_free));
    field("reduced", bool_text(p.is_reduced));
    field("elementary", bool_text(p.is_elementary));
    field("bounded at", prime_map_text(p.bounded_at, [](bool b) { return bool_text(b); }));
    field("T_p elem+finite",
          prime_map_text(p.p_shape_elem_plus_finite, [](bool b) { return bool_text(b); }));
    field("property (P)", bool_text(p.property_p));
    std::string qc;
    if (p.quasi_cyclic_images.every_prime) qc = "every prime";
    if (!p.quasi_cyclic_images.primes.empty()) {
        if (!qc.empty()) qc += "; ";
        qc += "{";
        bool first = true;
        for (std::uint64_t q : p.quasi_cyclic_images.primes) {
            if (!first) qc += ", ";
            first = false;
            qc += std::to_string(q);
        }
        qc += "}";
    }
    field("quasi-cyclic images", qc.empty() ? "none" : qc);

    os << "\nverdicts\n";
    verdict_line(os, "bassian", doc.report.bassian);
    verdict_line(os, "hereditarily Bassian", doc.report.hereditarily_bassian);
    verdict_line(os, "hereditarily Hopfian", doc.report.hereditarily_hopfian);
    verdict_line(os, "nearly Bassian", doc.report.nearly_bassian);
    verdict_line(os, "super Bassian", doc.report.super_bassian);
    verdict_line(os, "generalized Bassian", doc.report.generalized_bassian);
    verdict_line(os, "nearly generalized Bassian", doc.report.nearly_generalized_bassian);

    if (doc.decomposition) {
        os << "\ndecomposition\n";
        os << "  E (elementary): " << render(doc.decomposition->elementary) << "\n";
        os << "  H (Bassian):    " << render(doc.decomposition->bassian) << "\n";
    }
    if (doc.strictness_flag) os << "\nmode: strict-paper (derived rules N4/N5 disabled)\n";
    return os.str();
}

}  // namespace abtaxon

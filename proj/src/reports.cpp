#include "padiclab/reports.hpp"

#include <json.hpp>
#include <sstream>

namespace padiclab {

std::string trial_csv_header() {
    return "trial,seed,p,n,r,r0,rank_rem,bound_rem_num,bound_rem_den,rank_quo,"
           "bound_quo_num,bound_quo_den,rank_digit1,bound_conj,applicable,holds,tight,"
           "wall_time_ms";
}

namespace {

void put(std::ostringstream& out, const std::optional<std::size_t>& v) {
    if (v) out << *v;
}

void put_bool(std::ostringstream& out, const std::optional<bool>& v) {
    if (v) out << (*v ? 1 : 0);
}

void put_rat(std::ostringstream& out, const std::optional<mpq_class>& v) {
    if (v)
        out << v->get_num().get_str() << ',' << v->get_den().get_str();
    else
        out << ',';
}

}  // namespace

std::string trial_csv_row(const TrialRecord& t) {
    std::ostringstream out;
    out << t.trial << ',' << t.seed << ',' << t.p << ',' << t.n << ',';
    put(out, t.r);
    out << ',';
    put(out, t.r0);
    out << ',';
    put(out, t.rank_rem);
    out << ',';
    put_rat(out, t.bound_rem);
    out << ',';
    put(out, t.rank_quo);
    out << ',';
    put_rat(out, t.bound_quo);
    out << ',';
    put(out, t.rank_digit1);
    out << ',';
    if (t.bound_conj) out << t.bound_conj->get_str();
    out << ',';
    put_bool(out, t.applicable);
    out << ',';
    put_bool(out, t.holds);
    out << ',';
    put_bool(out, t.tight);
    out << ',' << t.wall_time_ms;
    return out.str();
}

std::string trial_json(const TrialRecord& t) {
    nlohmann::ordered_json j;
    j["trial"] = t.trial;
    j["seed"] = t.seed;
    j["p"] = t.p;
    j["n"] = t.n;
    if (t.r) j["r"] = *t.r;
    if (t.r0) j["r0"] = *t.r0;
    if (t.rank_rem) j["rank_rem"] = *t.rank_rem;
    if (t.bound_rem) {
        j["bound_rem_num"] = t.bound_rem->get_num().get_str();
        j["bound_rem_den"] = t.bound_rem->get_den().get_str();
    }
    if (t.rank_quo) j["rank_quo"] = *t.rank_quo;
    if (t.bound_quo) {
        j["bound_quo_num"] = t.bound_quo->get_num().get_str();
        j["bound_quo_den"] = t.bound_quo->get_den().get_str();
    }
    if (t.rank_digit1) j["rank_digit1"] = *t.rank_digit1;
    if (t.bound_conj) j["bound_conj"] = t.bound_conj->get_str();
    if (t.applicable) j["applicable"] = *t.applicable;
    if (t.holds) j["holds"] = *t.holds;
    if (t.tight) j["tight"] = *t.tight;
    j["wall_time_ms"] = t.wall_time_ms;
    return j.dump();
}

std::string report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["claim"] = r.claim;
    j["inputs"] = r.inputs;
    j["computed"] = r.computed;
    j["applicable"] = r.applicable;
    j["holds"] = r.holds;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j.dump();
}

std::string report_brief(const VerificationReport& r) {
    std::ostringstream out;
    out << r.claim;
    for (const auto& [k, v] : r.inputs) out << ' ' << k << '=' << v;
    if (!r.applicable)
        out << " : not applicable";
    else
        out << (r.holds ? " : holds" : " : FAILS");
    return out.str();
}

}  // namespace padiclab

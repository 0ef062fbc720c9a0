#include "frc/report_json.hpp"

namespace frc::json {

Json to_json(const CodeProfile& p) {
    Json j;
    j["alpha"] = p.alpha;
    j["rho"] = p.rho;
    j["alpha_per_node"] = p.alpha_per_node;
    j["rho_per_packet"] = p.rho_per_packet;
    j["uniform_storage"] = p.is_uniform_storage;
    j["regular_replication"] = p.is_regular_replication;
    return j;
}

Json to_json(const IdentityReport& r) {
    Json j;
    j["classification"] = to_string(r.classification);
    j["n_alpha"] = r.n_alpha;
    j["rho_theta"] = r.rho_theta;
    j["sum_alpha"] = r.sum_alpha;
    j["sum_rho"] = r.sum_rho;
    j["double_counting"] = r.double_counting;
    return j;
}

Json to_json(const Coverage& c) {
    Json j;
    j["k"] = c.k;
    j["min_coverage"] = c.value;
    j["witness"] = c.witness;
    return j;
}

Json to_json(const CoverageProfile& p) {
    Json j;
    j["theta"] = p.theta;
    j["per_k"] = Json::array();
    for (const auto& c : p.per_k) j["per_k"].push_back(to_json(c));
    return j;
}

Json to_json(const GoodnessReport& r) {
    Json j;
    j["k"] = r.k;
    j["alpha"] = r.alpha;
    j["theta"] = r.theta;
    j["weak"] = r.weak;
    j["file_size"] = r.file_size;
    j["rhs"] = r.rhs;
    j["rhs_sign"] = r.rhs_sign();
    j["margin"] = r.margin;
    j["passed"] = r.passed;
    return j;
}

Json to_json(const StructuralReport& r) {
    Json j;
    j["weak"] = r.weak;
    j["passed"] = r.passed();
    j["first_failing_k"] = r.first_failing_k ? Json(*r.first_failing_k) : Json(nullptr);
    j["per_k"] = Json::array();
    for (const auto& g : r.per_k) j["per_k"].push_back(to_json(g));
    return j;
}

Json to_json(const PrgMargin& m) {
    Json j;
    j["p"] = m.p;
    j["q"] = m.q;
    j["theta"] = m.theta;
    j["margin"] = m.margin;
    return j;
}

Json to_json(const RingPrediction& p) {
    Json j;
    j["k"] = p.k ? Json(*p.k) : Json(nullptr);
    j["basis"] = to_string(p.basis);
    return j;
}

Json to_json(const RepairPlan& plan) {
    Json j;
    j["failed"] = plan.failed;
    j["assignments"] = Json::array();
    for (const auto& a : plan.assignments)
        j["assignments"].push_back(Json{{"packet", a.packet}, {"helper", a.helper}});
    j["helpers"] = plan.helpers;
    j["repair_degree"] = plan.repair_degree();
    j["bandwidth"] = plan.bandwidth();
    j["beta"] = RepairPlan::beta;
    return j;
}

Json to_json(const TableRow& row) {
    Json j;
    j["n"] = row.n;
    j["k"] = row.k;
    j["d"] = row.d;
    j["rho"] = row.rho;
    j["theta"] = row.theta;
    if (row.t) j["t"] = *row.t;
    j["provenance"] = row.provenance == Provenance::Generated ? "generated" : "transcribed";
    return j;
}

Json to_json(const AuditFinding& f) {
    Json j;
    j["index"] = f.index;
    j["row"] = to_json(f.row);
    j["identity_ok"] = f.identity_ok;
    j["margin"] = f.goodness.margin;
    j["rhs"] = f.goodness.rhs;
    j["goodness_ok"] = f.goodness.passed;
    j["rhs_positive"] = f.rhs_positive;
    j["rhs_nonnegative"] = f.rhs_nonnegative;
    j["rhs_filter_ok"] = f.rhs_filter_ok;
    if (f.prediction) {
        j["predicted_k"] = to_json(*f.prediction);
        j["prediction_ok"] = f.prediction_matches.value_or(false);
    }
    j["duplicate_of"] = f.duplicate_of ? Json(*f.duplicate_of) : Json(nullptr);
    j["passed"] = f.passed();
    return j;
}

Json to_json(const RelationReport& r) {
    Json j;
    j["relation"] = r.name;
    j["holds"] = r.holds();
    j["missing"] = Json::array();
    for (const auto& row : r.missing) j["missing"].push_back(to_json(row));
    j["extra"] = Json::array();
    for (const auto& row : r.extra) j["extra"].push_back(to_json(row));
    return j;
}

Json to_json(const ConjectureInstance& c) {
    Json j;
    j["n"] = c.n;
    j["theta"] = c.theta;
    j["rho"] = c.rho;
    j["branch"] = c.n > c.theta ? "n>theta" : "theta>n";
    j["predicted_k"] = c.predicted;
    j["brute_force_k"] = c.brute_force;
    j["agrees"] = c.agrees();
    return j;
}

}  // namespace frc::json

#include "mldeg/report_json.hpp"

namespace mldeg {

namespace {

nlohmann::json complex_entry(const Complex& z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json point_entry(const std::vector<Complex>& point) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& z : point) arr.push_back(complex_entry(z));
    return arr;
}

nlohmann::json points_entry(const std::vector<std::vector<Complex>>& points) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : points) arr.push_back(point_entry(p));
    return arr;
}

nlohmann::json accounting_entry(const PathAccounting& paths) {
    return {{"finite", paths.finite}, {"diverged", paths.diverged}, {"failed", paths.failed}};
}

}  // namespace

nlohmann::json report_to_json(const MLReport& report) {
    nlohmann::json draws = nlohmann::json::array();
    for (const auto& rec : report.draw_records) {
        draws.push_back({{"data_seed", rec.data_seed},
                         {"valid", rec.valid},
                         {"count", rec.count},
                         {"note", rec.note},
                         {"attempts", rec.attempts},
                         {"gamma_retries", rec.gamma_retries},
                         {"paths", accounting_entry(rec.paths)}});
    }
    nlohmann::json solutions = nlohmann::json::array();
    for (const auto& sol : report.solutions) solutions.push_back(point_entry(sol));
    return {{"count", report.count},
            {"certified", report.certified},
            {"draws", report.draws},
            {"bezout", report.bezout},
            {"total_redraws", report.total_redraws},
            {"draw_records", draws},
            {"solutions", solutions}};
}

nlohmann::json report_to_json(const EulerReport& report) {
    return {{"dimension", report.dimension}, {"chi", report.chi}, {"ml", report_to_json(report.ml)}};
}

nlohmann::json report_to_json(const FamilyReport& report) {
    return {{"m", report.m},
            {"double_point_count", report.double_point_count},
            {"surface_ml", report_to_json(report.surface_ml)},
            {"boundary_ml", report_to_json(report.boundary_ml)},
            {"image_chi", report.image_chi},
            {"surface_chi", report.surface_chi},
            {"ic_chi", report.ic_chi},
            {"gap", report.gap},
            {"gap_matches_double_points", report.gap_matches_double_points},
            {"bound_holds", report.bound_holds},
            {"bound_tight", report.bound_tight},
            {"double_points_certified", report.double_points_certified},
            {"fibers_verified", report.fibers_verified},
            {"boundary_smooth", report.boundary_smooth},
            {"certified", report.certified},
            {"double_points", points_entry(report.double_point_list)},
            {"preimages", points_entry(report.preimage_list)}};
}

std::string canonical_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace mldeg

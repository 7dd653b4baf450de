#include "hypiso/bounds.hpp"
#include "hypiso/cli.hpp"
#include "hypiso/error.hpp"
#include "hypiso/hmodel.hpp"
#include "hypiso/optimize.hpp"
#include "hypiso/serialize.hpp"
#include "hypiso/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hypiso;

namespace {

BoundId bound_id(const std::string& text) {
    const auto id = parse_bound_id(text);
    if (!id)
        throw Error(ErrorCode::InvalidArgument, "unknown bound id '" + text + "'");
    return *id;
}

RegularNGonSpec regular_spec(int n, const std::string& by, double value) {
    if (by == "circumradius")
        return {n, Circumradius{value}};
    if (by == "inradius")
        return {n, Inradius{value}};
    if (by == "interior_angle")
        return {n, InteriorAngle{value}};
    if (by == "side_length")
        return {n, SideLength{value}};
    throw Error(ErrorCode::InvalidArgument, "unknown regular-polygon parameter '" + by + "'");
}

std::string polygon_metrics(const std::string& polygon_json) {
    const Polygon p = polygon_from_json(Json::parse(polygon_json));
    const Embedding e = embed(p);
    Json j;
    j["polygon"] = polygon_to_json(p);
    j["perimeter"] = perimeter(p);
    j["area"] = area(p);
    j["interior_angles"] = interior_angles(p);
    j["measured_perimeter"] = measured_perimeter(e);
    j["measured_area"] = measured_area(e);
    return j.dump();
}

std::string verify_json(const std::string& id, int trials, std::uint64_t seed, std::optional<int> n, int k,
                        int threads) {
    VerificationParams p;
    p.n = n;
    p.k = k;
    p.threads = threads;
    return to_json(verify_theorem(bound_id(id), p, trials, seed)).dump();
}

std::string optimize_json(const std::string& objective, int n, int k, std::uint64_t seed) {
    for (const auto& o : registered_objectives(n))
        if (o.problem_template.objective.name == objective)
            return to_json(solve_equal_sum(instantiate(o, k), seed)).dump();
    throw Error(ErrorCode::InvalidArgument, "unknown objective '" + objective + "'");
}

py::tuple cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hyperbolic polygon bounds core";
    py::register_exception<Error>(m, "HypisoError", PyExc_ValueError);

    m.def("regular_convert",
          [](int n, const std::string& by, double value) { return to_json(regular_convert(regular_spec(n, by, value))).dump(); },
          py::arg("n"), py::arg("by"), py::arg("value"));
    m.def("evaluate_bound",
          [](const std::string& id, int n, int k, double parameter) {
              return to_json(evaluate_bound(bound_id(id), n, k, parameter)).dump();
          },
          py::arg("id"), py::arg("n"), py::arg("k"), py::arg("parameter"));
    m.def("polygon_metrics", &polygon_metrics, py::arg("polygon_json"));
    m.def("verify", &verify_json, py::arg("id"), py::arg("trials"), py::arg("seed"), py::arg("n") = py::none(),
          py::arg("k") = 2, py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("optimize", &optimize_json, py::arg("objective"), py::arg("n"), py::arg("k"), py::arg("seed"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_cli", &cli, py::arg("args"));
}

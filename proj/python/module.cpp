#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cml/crystal.hpp"
#include "cml/mullineux.hpp"
#include "cml/plane.hpp"
#include "cml/qcount.hpp"
#include "cml/words.hpp"

namespace py = pybind11;

namespace {

cml::Partition to_partition(const std::vector<int>& parts) { return cml::Partition(parts); }

std::vector<std::vector<int>> tuple_parts(const std::vector<cml::Partition>& tuple) {
    std::vector<std::vector<int>> out;
    out.reserve(tuple.size());
    for (const auto& lam : tuple) out.push_back(lam.parts());
    return out;
}

}  // namespace

PYBIND11_MODULE(cmlpy, m) {
    m.doc() = "exact multiplicities of dominant maximal weights: crystal, "
              "p-core chain, and word-counting routes";

    m.def("transpose", [](const std::vector<int>& parts) {
        return cml::transpose(to_partition(parts)).parts();
    });
    m.def("is_p_restricted", [](const std::vector<int>& parts, int p) {
        return cml::is_p_restricted(to_partition(parts), p);
    });
    m.def("is_p_core", [](const std::vector<int>& parts, int p) {
        return cml::is_p_core(to_partition(parts), p);
    });
    m.def("tau_m", [](const std::vector<int>& parts, int m, int p) {
        return cml::tau_m(to_partition(parts), m, p).parts();
    });
    m.def("mullineux", [](const std::vector<int>& parts, int p) {
        return cml::mullineux(to_partition(parts), p).parts();
    });

    m.def("lambda_weight", &cml::lambda_weight_coeffs, py::arg("p"), py::arg("ell"),
          py::arg("t"));
    m.def("mu_weight", &cml::mu_weight_coeffs, py::arg("p"), py::arg("ell"), py::arg("u"));

    m.def(
        "weight_multiplicity",
        [](int p, int k, int s, const std::vector<long long>& target, std::int64_t max_states) {
            return cml::weight_multiplicity(p, k, s, target, max_states);
        },
        py::arg("p"), py::arg("k"), py::arg("s"), py::arg("target"),
        py::arg("max_states") = cml::kDefaultMaxStates);
    m.def("enumerate_Z", [](int p, int k, int s, int ell) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& tuple : cml::enumerate_Z(p, k, s, ell)) out.push_back(tuple_parts(tuple));
        return out;
    });

    m.def("count_avoiding_shuffles", &cml::count_avoiding_shuffles, py::arg("s"),
          py::arg("ell"), py::arg("k"));
    m.def("count_avoiding_involutions", &cml::count_avoiding_involutions, py::arg("ell"),
          py::arg("k"));
    m.def("syt_count", [](const std::vector<int>& parts) {
        return cml::syt_count(to_partition(parts));
    });
    m.def("fixed_points_Z", &cml::fixed_points_Z, py::arg("p"), py::arg("k"), py::arg("ell"));
    m.def("gamma_is_maximal", &cml::gamma_is_maximal, py::arg("p"), py::arg("k"),
          py::arg("ell"));

    m.def("ballot_count", &cml::ballot_count, py::arg("n"), py::arg("m"));
    m.def("qbinom", [](int a, int b) { return cml::qbinom(a, b).coeffs(); });
    m.def("q_lucas_verify", &cml::q_lucas_verify, py::arg("n"), py::arg("j"), py::arg("d"));
    m.def("totient_count", &cml::totient_count, py::arg("p"), py::arg("k"));
    m.def("count_U", &cml::count_U, py::arg("p"), py::arg("k"));
    m.def("maxweights", [](int p, int s, int k) {
        std::vector<std::pair<std::vector<int>, std::vector<long long>>> out;
        for (const auto& entry : cml::enumerate_S(p, s, k))
            out.emplace_back(entry.x, entry.weight.coeffs);
        return out;
    });
}

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hqt/bell.hpp"
#include "hqt/channels.hpp"
#include "hqt/loss.hpp"
#include "hqt/resources.hpp"
#include "hqt/teleport.hpp"
#include "hqt/threshold.hpp"

namespace py = pybind11;
using namespace hqt;

PYBIND11_MODULE(_hqt, m) {
  m.doc() = "hybrid-qubit linear-optical teleportation toolkit";

  py::class_<Rng>(m, "Rng")
      .def_static("stream", &Rng::stream, py::arg("master"), py::arg("a") = 0,
                  py::arg("b") = 0, py::arg("c") = 0)
      .def("uniform", &Rng::uniform);

  py::class_<HybridQubit>(m, "HybridQubit")
      .def(py::init([](std::complex<double> a, std::complex<double> b,
                       double alpha) {
             HybridQubit q{a, b, alpha};
             q.normalize();
             return q;
           }),
           py::arg("a"), py::arg("b"), py::arg("alpha"))
      .def_readonly("a", &HybridQubit::a)
      .def_readonly("b", &HybridQubit::b)
      .def_readonly("alpha", &HybridQubit::alpha);
  m.def("fidelity", &fidelity);

  py::enum_<ChannelKind>(m, "ChannelKind")
      .value("PSI_C", ChannelKind::PsiC)
      .value("Z", ChannelKind::Z)
      .value("Z_PRIME", ChannelKind::Zprime);
  py::enum_<Strategy>(m, "Strategy")
      .value("GI", Strategy::GI)
      .value("GALPHA", Strategy::GAlpha);
  py::enum_<bell::BAlphaOutcome>(m, "BAlphaOutcome")
      .value("EVEN0", bell::BAlphaOutcome::Even0)
      .value("ODD0", bell::BAlphaOutcome::Odd0)
      .value("ZERO_EVEN", bell::BAlphaOutcome::ZeroEven)
      .value("ZERO_ODD", bell::BAlphaOutcome::ZeroOdd)
      .value("FAILURE", bell::BAlphaOutcome::Failure);
  py::enum_<bell::BIIClass>(m, "BIIClass")
      .value("PSI_MINUS", bell::BIIClass::PsiMinus)
      .value("PSI_PLUS", bell::BIIClass::PsiPlus)
      .value("UPPER_ONLY", bell::BIIClass::UpperOnly)
      .value("LOWER_ONLY", bell::BIIClass::LowerOnly)
      .value("NO_CLICK", bell::BIIClass::NoClick);

  m.def("failure_probability", &failure_probability, py::arg("alpha"));
  m.def("lossy_failure_probability", &lossy_failure_probability,
        py::arg("alpha"), py::arg("eta"));
  m.def("lossy_failure_probability_exact", &lossy_failure_probability_exact,
        py::arg("alpha"), py::arg("eta"));
  m.def("b_alpha_failure_probability", &bell::b_alpha_failure_probability,
        py::arg("alpha"));

  py::class_<PauliFrame>(m, "PauliFrame")
      .def_readonly("j", &PauliFrame::j)
      .def_readonly("k", &PauliFrame::k);
  py::class_<TeleportResult>(m, "TeleportResult")
      .def_readonly("success", &TeleportResult::success)
      .def_readonly("outcome_alpha", &TeleportResult::outcome_alpha)
      .def_readonly("outcome_ii", &TeleportResult::outcome_ii)
      .def_readonly("frame", &TeleportResult::frame)
      .def_readonly("output", &TeleportResult::output);
  m.def("teleport", &teleport, py::arg("input"), py::arg("channel"),
        py::arg("rng"));

  py::class_<OracleOutcome>(m, "OracleOutcome")
      .def_readonly("outcome_alpha", &OracleOutcome::outcome_alpha)
      .def_readonly("outcome_ii", &OracleOutcome::outcome_ii)
      .def_readonly("failure", &OracleOutcome::failure)
      .def_readonly("probability", &OracleOutcome::probability)
      .def_readonly("fidelity", &OracleOutcome::fidelity);
  m.def("oracle_teleport_distribution", &oracle_teleport_distribution,
        py::arg("input"), py::arg("channel"));

  m.def("generation_success_probability", &generation_success_probability,
        py::arg("target"), py::arg("strategy"), py::arg("alpha"));
  m.def("memory_error_rate", &loss::memory_error_rate, py::arg("eta"),
        py::arg("alpha"));
  m.def("average_channel_cost", &resources::average_channel_cost,
        py::arg("target"), py::arg("strategy"), py::arg("alpha"));
  m.def("total_round_cost", &resources::total_round_cost, py::arg("strategy"),
        py::arg("alpha"));
  m.def("crossover_alpha", &resources::crossover_alpha, py::arg("tol") = 1e-6);

  py::class_<threshold::ThresholdPoint>(m, "ThresholdPoint")
      .def_readonly("alpha", &threshold::ThresholdPoint::alpha)
      .def_readonly("eta_threshold",
                    &threshold::ThresholdPoint::eta_threshold);
  m.def(
      "find_threshold",
      [](double alpha, Strategy s, long trials, uint64_t seed, double eta_hi,
         double tol) {
        return threshold::find_threshold(alpha, s, trials, seed, eta_hi, tol);
      },
      py::arg("alpha"), py::arg("strategy"), py::arg("trials") = 20000,
      py::arg("seed") = 1, py::arg("eta_hi") = 0.2, py::arg("tol") = 1e-3);
}

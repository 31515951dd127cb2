#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "flagspec/error.hpp"
#include "flagspec/flag_variety.hpp"
#include "flagspec/job.hpp"
#include "flagspec/root_system.hpp"
#include "flagspec/spectral.hpp"
#include "flagspec/weyl.hpp"

namespace py = pybind11;
using namespace flagspec;

namespace {

py::object py_int(const BigInt& n) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

py::object py_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py_int(r.get_num()), py_int(r.get_den()));
}

// Accepts int, fractions.Fraction or "p/q" strings. Floats are rejected.
Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) throw Error(ErrorKind::invalid_argument, "floats are not accepted; use Fraction or 'p/q'");
  return parse_rational(py::str(h).cast<std::string>());
}

std::vector<Rational> to_rationals(const py::iterable& xs) {
  std::vector<Rational> out;
  for (auto h : xs) out.push_back(to_rational(h));
  return out;
}

Weight to_weight(const py::iterable& xs) { return Weight(to_rationals(xs)); }

py::list py_list(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& r : v) out.append(py_fraction(r));
  return out;
}

py::list py_weight(const Weight& w) { return py_list(w.fw_coords); }

py::dict py_report(const CohomologyReport& r) {
  py::dict d;
  d["vanishes"] = r.vanishes();
  if (r.concentrated) {
    d["degree"] = r.concentrated->degree;
    d["word"] = r.concentrated->word.letters;
    d["dominant_weight"] = py_weight(r.concentrated->dominant_weight);
    d["dimension"] = py_int(r.concentrated->dimension);
  }
  return d;
}

py::dict py_harmonic(const HarmonicReport& r) {
  py::dict d;
  d["spinc"] = r.spinc_ok;
  d["twist_weight"] = r.twist_weight.coeffs;
  d["harmonic"] = r.has_harmonic_spinors();
  if (r.harmonic) {
    d["kernel_dimension"] = py_int(r.harmonic->kernel_dimension);
    d["degree"] = r.harmonic->concentration_degree;
    d["index"] = py_int(r.harmonic->index);
    d["word"] = r.harmonic->word.letters;
    d["dominant_weight"] = py_weight(r.harmonic->dominant_weight);
  }
  return d;
}

KahlerClass to_kahler(const py::iterable& coeffs, bool pi_units) { return KahlerClass{to_rationals(coeffs), pi_units}; }

SpectrumOptions to_options(std::size_t max_distinct, bool summary_only) {
  return SpectrumOptions{max_distinct, summary_only};
}

}  // namespace

PYBIND11_MODULE(_flagspec, m) {
  m.doc() = "Exact Spin^c Dirac spectra and harmonic spinors on flag varieties";

  static py::exception<Error> error(m, "FlagspecError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      std::string msg = std::string(to_string(e.kind())) + ": " + e.what();
      PyErr_SetString(error.ptr(), msg.c_str());
    }
  });

  py::class_<PiScalar>(m, "PiScalar")
      .def_property_readonly("value", [](const PiScalar& s) { return py_fraction(s.value()); })
      .def_property_readonly("pi_power", &PiScalar::pi_power)
      .def("__eq__", [](const PiScalar& a, const PiScalar& b) { return a == b; })
      .def("__repr__", [](const PiScalar& s) { return "PiScalar(" + to_string(s) + ")"; })
      .def("__str__", [](const PiScalar& s) { return to_string(s); });

  py::class_<Spectrum>(m, "Spectrum")
      .def_property_readonly("entries",
                             [](const Spectrum& s) {
                               py::list out;
                               for (const auto& e : s.entries)
                                 out.append(py::make_tuple(py_fraction(e.value), py_int(e.multiplicity)));
                               return out;
                             })
      .def_property_readonly("total", [](const Spectrum& s) { return py_int(s.total); })
      .def_readonly("pi_power", &Spectrum::pi_power)
      .def_readonly("imaginary", &Spectrum::imaginary)
      .def_readonly("truncated", &Spectrum::truncated)
      .def_property_readonly("min", [](const Spectrum& s) { return py_fraction(s.min); })
      .def_property_readonly("max", [](const Spectrum& s) { return py_fraction(s.max); })
      .def("to_json", [](const Spectrum& s) { return to_json(s).dump(); });

  py::class_<KahlerClass>(m, "KahlerClass")
      .def(py::init(&to_kahler), py::arg("coeffs"), py::arg("pi_units") = false)
      .def_property_readonly("coeffs", [](const KahlerClass& c) { return py_list(c.coeffs); })
      .def_readonly("pi_units", &KahlerClass::pi_units)
      .def("__eq__", [](const KahlerClass& a, const KahlerClass& b) { return a == b; });

  py::class_<RootSystem>(m, "RootSystem")
      .def_property_readonly("name", [](const RootSystem& rs) { return rs.lie_type().name(); })
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("cartan", &RootSystem::cartan)
      .def_property_readonly("symmetrizer", [](const RootSystem& rs) { return py_list(rs.symmetrizer()); })
      .def_property_readonly("positive_roots", [](const RootSystem& rs) {
        std::vector<std::vector<int>> out;
        for (const auto& r : rs.positive_roots()) out.push_back(r.simple_coords);
        return out;
      });

  m.def("build_root_system", [](const std::string& family, int rank) {
    if (family.size() != 1) throw Error(ErrorKind::invalid_argument, "family must be a single letter");
    return build_root_system(LieType::make(family[0], rank));
  }, py::arg("family"), py::arg("rank"));

  m.def("coroot_pairing", [](const RootSystem& rs, const py::iterable& w, std::vector<int> beta) {
    return py_fraction(coroot_pairing(rs, to_weight(w), Root{std::move(beta)}));
  });
  m.def("inner_product", [](const RootSystem& rs, const py::iterable& a, const py::iterable& b) {
    return py_fraction(inner_product(rs, to_weight(a), to_weight(b)));
  });
  m.def("weyl_vector", [](const RootSystem& rs) { return py_weight(weyl_vector(rs)); });
  m.def("root_as_weight", [](const RootSystem& rs, std::vector<int> beta) {
    return py_weight(root_as_weight(rs, Root{std::move(beta)}));
  });
  m.def("simple_reflection", [](const RootSystem& rs, int i, const py::iterable& w) {
    return py_weight(simple_reflection(rs, i, to_weight(w)));
  });
  m.def("shifted_action", [](const RootSystem& rs, std::vector<int> word, const py::iterable& w) {
    return py_weight(shifted_action(rs, WeylWord{std::move(word)}, to_weight(w)));
  });
  m.def("is_dot_regular", [](const RootSystem& rs, const py::iterable& w) { return is_dot_regular(rs, to_weight(w)); });
  m.def("to_dominant", [](const RootSystem& rs, const py::iterable& w) {
    auto r = to_dominant(rs, to_weight(w));
    return py::make_tuple(r.word.letters, py_weight(r.result), r.length);
  });
  m.def("weyl_dimension", [](const RootSystem& rs, const py::iterable& w) {
    return py_int(weyl_dimension(rs, to_weight(w)));
  });
  m.def("bwb_classify", [](const RootSystem& rs, const py::iterable& w) { return py_report(bwb_classify(rs, to_weight(w))); });

  py::class_<FlagVariety>(m, "FlagVariety")
      .def_property_readonly("painted", &FlagVariety::painted)
      .def_property_readonly("dim_c", &FlagVariety::dim_c)
      .def_property_readonly("delta_p", [](const FlagVariety& x) { return py_weight(x.delta_p()); })
      .def_property_readonly("radical_roots", [](const FlagVariety& x) {
        std::vector<std::vector<int>> out;
        for (auto b : x.radical_roots()) out.push_back(x.root_system().positive_roots()[b].simple_coords);
        return out;
      })
      .def_property_readonly("root_system", &FlagVariety::root_system);

  m.def("build_flag", [](const RootSystem& rs, std::vector<int> painted) { return build_flag(rs, std::move(painted)); },
        py::arg("rs"), py::arg("painted"));
  m.def("curve_pairing", [](const FlagVariety& x, const py::iterable& w, std::vector<int> beta) {
    return py_fraction(curve_pairing(x, to_weight(w), Root{std::move(beta)}));
  });
  m.def("canonical_weight", [](const FlagVariety& x) { return py_weight(canonical_weight(x)); });
  m.def("fano_index", &fano_index);
  m.def("is_kahler", &is_kahler);
  m.def("scalar_curvature", &scalar_curvature);
  m.def("hym_slope", [](const FlagVariety& x, std::vector<long> e, const KahlerClass& omega) {
    return hym_slope(x, LineBundleClass{std::move(e)}, omega);
  });
  m.def("ke_class", [](const FlagVariety& x, std::optional<std::string> target) {
    std::optional<PiScalar> t;
    if (target) t = parse_pi_scalar(*target);
    return ke_class(x, t);
  }, py::arg("x"), py::arg("scalar_target") = py::none());

  m.def("is_spinc", [](const FlagVariety& x, std::vector<long> l) { return is_spinc(x, LineBundleClass{std::move(l)}); });
  m.def("twist_weight", [](const FlagVariety& x, std::vector<long> l) {
    return twist_weight(x, LineBundleClass{std::move(l)}).coeffs;
  });
  m.def("theta_spectrum",
        [](const FlagVariety& x, const KahlerClass& theta, const KahlerClass& omega, std::size_t max_distinct,
           bool summary_only) { return theta_spectrum(x, theta, omega, to_options(max_distinct, summary_only)); },
        py::arg("x"), py::arg("theta"), py::arg("omega"), py::arg("max_distinct") = kDefaultMaxDistinct,
        py::arg("summary_only") = false);
  m.def("weitzenboeck_spectrum",
        [](const FlagVariety& x, std::vector<long> l, const KahlerClass& omega, std::size_t max_distinct,
           bool summary_only) {
          return weitzenboeck_spectrum(x, LineBundleClass{std::move(l)}, omega, to_options(max_distinct, summary_only));
        },
        py::arg("x"), py::arg("line_bundle"), py::arg("omega"), py::arg("max_distinct") = kDefaultMaxDistinct,
        py::arg("summary_only") = false);
  m.def("weitzenboeck_min", [](const FlagVariety& x, std::vector<long> l, const KahlerClass& omega) {
    return weitzenboeck_min(x, LineBundleClass{std::move(l)}, omega);
  });
  m.def("dirac_lower_bound", [](const FlagVariety& x, std::vector<long> l, const KahlerClass& omega) {
    auto b = dirac_lower_bound(x, LineBundleClass{std::move(l)}, omega);
    return py::make_tuple(b.value, b.vacuous);
  });
  m.def("harmonic_spinors", [](const FlagVariety& x, std::vector<long> l) {
    return py_harmonic(harmonic_spinors(x, LineBundleClass{std::move(l)}));
  });

  m.def("run_job_json", [](const std::string& job) { return emit(run_job(job_from_json(nlohmann::json::parse(job))), Format::json); },
        "Runs a job given as the JSON echo produced by the CLI; returns the result document as JSON text.");
  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.attr("__version__") = std::string(kArtifactVersion);
}

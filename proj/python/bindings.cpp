#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jnrange/channels.hpp"
#include "jnrange/demos.hpp"
#include "jnrange/errors.hpp"
#include "jnrange/jnr.hpp"
#include "jnrange/linalg.hpp"
#include "jnrange/numrange.hpp"
#include "jnrange/parallel.hpp"
#include "jnrange/shadow.hpp"
#include "jnrange/states.hpp"

namespace py = pybind11;
using namespace jnrange;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;
using RArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2) throw DimensionError("expected a 2-d array");
  ComplexMatrix m(a.shape(0), a.shape(1));
  auto r = a.unchecked<2>();
  for (py::ssize_t i = 0; i < r.shape(0); ++i)
    for (py::ssize_t j = 0; j < r.shape(1); ++j) m(i, j) = r(i, j);
  return m;
}

py::array_t<Complex> from_matrix(const ComplexMatrix& m) {
  py::array_t<Complex> out({m.rows(), m.cols()});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
  return out;
}

template <class T>
py::array_t<T> from_vector(const std::vector<T>& v) {
  py::array_t<T> out(v.size());
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

HermitianTuple to_tuple(const std::vector<CArray>& ops) {
  std::vector<ComplexMatrix> ms;
  for (const auto& a : ops) ms.push_back(to_matrix(a));
  return HermitianTuple(std::move(ms));
}

std::vector<py::array_t<Complex>> from_tuple(const HermitianTuple& t) {
  std::vector<py::array_t<Complex>> out;
  for (const auto& op : t.operators()) out.push_back(from_matrix(op));
  return out;
}

ComplexVector to_vector(const CArray& a) {
  if (a.ndim() != 1) throw DimensionError("expected a 1-d array");
  return ComplexVector(a.data(), a.data() + a.size());
}

py::array_t<double> points_array(const PointCloud& c) {
  py::array_t<double> out({c.size(), c.dim});
  std::copy(c.coords.begin(), c.coords.end(), out.mutable_data());
  return out;
}

PointCloud to_points(const RArray& a) {
  if (a.ndim() != 2) throw DimensionError("expected an (n, m) array of points");
  PointCloud c;
  c.dim = a.shape(1);
  c.coords.assign(a.data(), a.data() + a.size());
  return c;
}

py::dict report_dict(const ChannelReport& r) {
  py::dict d;
  d["is_unital"] = r.is_unital;
  d["is_trace_preserving"] = r.is_trace_preserving;
  d["unital_defect"] = r.unital_defect;
  d["tp_defect"] = r.tp_defect;
  return d;
}

py::dict report_dict(const InclusionReport& r) {
  py::dict d;
  d["max_violation"] = r.max_violation;
  d["directions_checked"] = r.directions_checked;
  d["samples_checked"] = r.samples_checked;
  d["violations"] = r.violations;
  d["unital_defect"] = r.unital_defect;
  d["tp_defect"] = r.tp_defect;
  d["passed"] = r.passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_jnrange, m) {
  m.doc() = "Numerical ranges, joint numerical ranges and joint numerical shadows";

  auto value_error = py::handle(PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", value_error);
  py::register_exception<DimensionError>(m, "DimensionError", value_error);
  py::register_exception<HypothesisError>(m, "HypothesisError", value_error);
  py::register_exception<DomainError>(m, "DomainError", value_error);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.def("eigh", [](const CArray& a) {
    const auto e = hermitian_eigen(to_matrix(a));
    return py::make_tuple(from_vector(e.eigenvalues), from_matrix(e.eigenvectors));
  }, py::arg("a"), "Eigenvalues (ascending) and unitary eigenvectors of a Hermitian matrix.");

  m.def("pauli_basis", [] { return from_tuple(pauli_basis()); });
  m.def("gellmann_basis", [] { return from_tuple(gellmann_basis()); });
  m.def("pauli_extended", [] { return from_tuple(pauli_extended_tuple()); });
  m.def("traceless_basis", [](std::size_t n) { return from_tuple(traceless_orthogonal_basis(n)); },
        py::arg("n"));

  m.def("haar_state", [](std::size_t dim, std::uint64_t seed) {
    CounterRng rng(seed);
    const auto psi = haar_sample(dim, rng);
    return from_vector(ComplexVector(psi.amplitudes().begin(), psi.amplitudes().end()));
  }, py::arg("dim"), py::arg("seed") = 42);

  m.def("support_value", [](const CArray& a, double theta) { return support_value(to_matrix(a), theta); },
        py::arg("a"), py::arg("theta"));
  m.def("numerical_range", [](const CArray& a, std::size_t num_angles) {
    const auto b = boundary(to_matrix(a), num_angles);
    py::dict d;
    d["theta"] = from_vector(b.angles);
    d["support"] = from_vector(b.support_values);
    d["points"] = from_vector(b.boundary_points);
    return d;
  }, py::arg("a"), py::arg("num_angles") = kDefaultNumAngles,
     "Support function and boundary points of W(a) on an equally spaced angle grid.");
  m.def("ellipse_2x2", [](const CArray& a) {
    const auto e = ellipse_2x2(to_matrix(a));
    py::dict d;
    d["center"] = e.center;
    d["semi_major"] = e.semi_major;
    d["semi_minor"] = e.semi_minor;
    d["tilt"] = e.tilt;
    d["foci"] = py::make_tuple(e.foci.first, e.foci.second);
    return d;
  }, py::arg("a"));

  m.def("jnr_map", [](const std::vector<CArray>& ops, const CArray& psi) {
    return from_vector(jnr_map(to_tuple(ops), PureState(to_vector(psi))));
  }, py::arg("ops"), py::arg("psi"));
  m.def("jnr_sample", [](const std::vector<CArray>& ops, std::size_t count, std::uint64_t seed,
                         std::size_t workers) {
    const auto t = to_tuple(ops);
    PointCloud c;
    {
      py::gil_scoped_release release;
      c = jnr_sample(t, count, seed, workers == 0 ? default_workers() : workers);
    }
    return points_array(c);
  }, py::arg("ops"), py::arg("count"), py::arg("seed") = 42, py::arg("workers") = 0,
     "Haar samples pushed through the joint numerical range map, as an (count, m) array.");
  m.def("jnr_support", [](const std::vector<CArray>& ops, const RArray& u) {
    return jnr_support(to_tuple(ops), std::vector<double>(u.data(), u.data() + u.size()));
  }, py::arg("ops"), py::arg("u"));
  m.def("factorize", [](const std::vector<CArray>& ops) {
    const auto f = factorize(to_tuple(ops));
    py::array_t<double> map({f.coefficient_map.rows(), f.coefficient_map.cols()});
    auto w = map.mutable_unchecked<2>();
    for (std::size_t i = 0; i < f.coefficient_map.rows(); ++i)
      for (std::size_t k = 0; k < f.coefficient_map.cols(); ++k) w(i, k) = f.coefficient_map(i, k);
    py::dict d;
    d["rank"] = f.rank;
    d["condition_number"] = f.condition_number;
    d["sigma_min"] = f.sigma_min;
    d["coefficient_map"] = map;
    d["trace_offsets"] = from_vector(f.trace_offsets);
    std::vector<py::array_t<Complex>> basis;
    for (const auto& e : f.subspace_basis) basis.push_back(from_matrix(e));
    d["subspace_basis"] = basis;
    return d;
  }, py::arg("ops"));
  m.def("verify_affine_injectivity", [](const std::vector<CArray>& ops, std::size_t trials,
                                        std::uint64_t seed, double tol) {
    const auto r = verify_affine_injectivity(to_tuple(ops), trials, seed, tol);
    py::dict d;
    d["trials"] = r.trials;
    d["rank"] = r.rank;
    d["condition_number"] = r.condition_number;
    d["violations"] = r.violations;
    d["min_distance_ratio"] = r.min_distance_ratio;
    d["sigma_min"] = r.sigma_min;
    return d;
  }, py::arg("ops"), py::arg("trials") = 1000, py::arg("seed") = 42, py::arg("tol") = 1e-8);

  py::class_<KrausChannel>(m, "Channel")
      .def(py::init([](const std::vector<CArray>& kraus) {
             std::vector<ComplexMatrix> xs;
             for (const auto& k : kraus) xs.push_back(to_matrix(k));
             return KrausChannel(std::move(xs));
           }),
           py::arg("kraus"))
      .def_static("builtin", &builtin_channel, py::arg("spec"),
                  "decaying:p, phase_flip:p, double_flip:p,q or swap_conjugation")
      .def_property_readonly("dim", &KrausChannel::dim)
      .def_property_readonly("kraus", [](const KrausChannel& c) {
        std::vector<py::array_t<Complex>> out;
        for (const auto& x : c.kraus()) out.push_back(from_matrix(x));
        return out;
      })
      .def("__call__", [](const KrausChannel& c, const CArray& a, std::size_t times) {
        return from_matrix(apply_iterated(c, to_matrix(a), times));
      }, py::arg("a"), py::arg("times") = 1)
      .def("apply_tuple", [](const KrausChannel& c, const std::vector<CArray>& ops) {
        return from_tuple(apply(c, to_tuple(ops)));
      }, py::arg("ops"))
      .def("analyze", [](const KrausChannel& c) { return report_dict(analyze(c)); })
      .def("adjoint", &adjoint_channel)
      .def("decompose", [](const KrausChannel& c, const CArray& psi) {
        const auto d = decompose_pure(c, PureState(to_vector(psi)));
        std::vector<py::array_t<Complex>> states;
        for (const auto& s : d.states) {
          states.push_back(from_vector(ComplexVector(s.amplitudes().begin(), s.amplitudes().end())));
        }
        return py::make_tuple(from_vector(d.weights), states);
      }, py::arg("psi"));

  m.def("random_unital_channel", [](std::size_t dim, std::size_t k, std::uint64_t seed) {
    CounterRng rng(seed);
    return random_unital_channel(dim, k, rng);
  }, py::arg("dim"), py::arg("k"), py::arg("seed") = 42);

  m.def("verify_inclusion", [](const KrausChannel& c, const CArray& a, std::size_t directions,
                               std::size_t samples, std::uint64_t seed, double tol) {
    return report_dict(verify_inclusion(c, to_matrix(a), directions, samples, seed, tol));
  }, py::arg("channel"), py::arg("a"), py::arg("directions") = 1024, py::arg("samples") = 1000,
     py::arg("seed") = 42, py::arg("tol") = 1e-8);
  m.def("verify_inclusion_tuple", [](const KrausChannel& c, const std::vector<CArray>& ops,
                                     std::size_t directions, std::size_t samples, std::uint64_t seed,
                                     double tol) {
    return report_dict(verify_inclusion(c, to_tuple(ops), directions, samples, seed, tol));
  }, py::arg("channel"), py::arg("ops"), py::arg("directions") = 1024, py::arg("samples") = 1000,
     py::arg("seed") = 42, py::arg("tol") = 1e-8);

  m.def("moments", [](const RArray& points, unsigned degree) {
    const auto table = moments(shadow_from_points(to_points(points)), degree);
    py::list rows;
    for (const auto& e : table.entries) {
      rows.append(py::make_tuple(py::tuple(py::cast(e.index)), e.estimate, e.std_error));
    }
    return rows;
  }, py::arg("points"), py::arg("degree"),
     "Empirical moments as (index, estimate, std_error) rows, by total degree.");
  m.def("histogram", [](const RArray& points, std::size_t bins) {
    const auto h = histogram(shadow_from_points(to_points(points)), bins);
    py::dict d;
    d["bounds"] = h.bounds;
    d["bins"] = h.bins_per_axis;
    d["counts"] = from_vector(h.counts);
    return d;
  }, py::arg("points"), py::arg("bins") = 128);
  m.def("ball_shadow_check", [](std::size_t count, std::uint64_t seed, bool swapped) {
    const auto r = ball_shadow_check(count, seed, swapped ? BallVariant::swapped : BallVariant::extended);
    py::dict d;
    d["max_norm"] = r.max_norm;
    d["ks_statistic"] = r.ks_statistic;
    d["ks_critical"] = r.ks_critical;
    d["second_moments"] = r.second_moments;
    d["max_route_discrepancy"] = r.max_route_discrepancy;
    d["passed"] = r.passed();
    return d;
  }, py::arg("count") = 100000, py::arg("seed") = 42, py::arg("swapped") = false);

  m.def("run_demo", [](const std::string& name, std::size_t iterates, std::size_t num_angles) {
    const auto demo = run_demo(demo_from_string(name), iterates, num_angles);
    py::list out;
    for (const auto& it : demo.iterates) {
      py::dict d;
      d["label"] = it.label;
      d["matrix"] = from_matrix(it.matrix);
      d["barycenter"] = it.barycenter;
      d["points"] = from_vector(it.boundary.boundary_points);
      out.append(d);
    }
    return out;
  }, py::arg("name"), py::arg("iterates") = 3, py::arg("num_angles") = kDefaultNumAngles);
}

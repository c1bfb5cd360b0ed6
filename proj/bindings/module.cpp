#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "eig33/eigensolver.hpp"
#include "eig33/invariants.hpp"
#include "eig33/mat3.hpp"

namespace py = pybind11;
using namespace eig33;

namespace {

// Accepts a flat sequence of 9 numbers (row-major) or three rows of three.
Mat3 to_mat(const py::handle& obj) {
  if (!py::isinstance<py::sequence>(obj))
    throw std::invalid_argument("matrix must be a sequence of numbers");
  const py::sequence seq = py::reinterpret_borrow<py::sequence>(obj);
  const py::ssize_t n = py::len(seq);
  Mat3 a;
  if (n == 9) {
    for (int k = 0; k < 9; ++k) a.e[k] = seq[k].cast<double>();
    return a;
  }
  if (n == 3) {
    for (int i = 0; i < 3; ++i) {
      // A 3-entry numeric input lands here too; report it as a shape error
      // rather than letting the row cast raise TypeError.
      if (!py::isinstance<py::sequence>(seq[i]))
        throw std::invalid_argument("matrix must be 9 flat entries or 3 rows of 3");
      const py::sequence row = py::reinterpret_borrow<py::sequence>(seq[i]);
      if (py::len(row) != 3) throw std::invalid_argument("rows must have 3 entries");
      for (int j = 0; j < 3; ++j) a.e[3 * i + j] = row[j].cast<double>();
    }
    return a;
  }
  throw std::invalid_argument("matrix must be 9 flat entries or 3 rows of 3");
}

py::list to_rows(const Mat3& a) {
  py::list rows;
  for (int i = 0; i < 3; ++i) {
    py::list row;
    for (int j = 0; j < 3; ++j) row.append(a(i, j));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_eig33, m) {
  m.doc() = "numerically stable invariants and eigenvalues of 3x3 matrices";
  m.attr("eps_mach") = eps_mach;

  py::class_<EigenTriple>(m, "EigenTriple")
      .def_readonly("lambda1", &EigenTriple::lambda1)
      .def_readonly("lambda2", &EigenTriple::lambda2)
      .def_readonly("lambda3", &EigenTriple::lambda3)
      .def_readonly("non_real_advisory", &EigenTriple::non_real_advisory)
      .def("__len__", [](const EigenTriple&) { return 3; })
      .def("__getitem__",
           [](const EigenTriple& t, py::ssize_t i) {
             switch (i < 0 ? i + 3 : i) {
               case 0: return t.lambda1;
               case 1: return t.lambda2;
               case 2: return t.lambda3;
               default: throw py::index_error();
             }
           })
      .def("__repr__", [](const EigenTriple& t) {
        return "EigenTriple(" + py::str(py::float_(t.lambda1)).cast<std::string>() + ", " +
               py::str(py::float_(t.lambda2)).cast<std::string>() + ", " +
               py::str(py::float_(t.lambda3)).cast<std::string>() +
               (t.non_real_advisory ? ", non_real_advisory=True)" : ")");
      });

  m.def("eigvals", [](const py::handle& a) { return eigvals(to_mat(a)); },
        "ascending eigenvalues by the stable closed-form solver");
  m.def("eigvalss", [](const py::handle& a) { return eigvalss(to_mat(a)); },
        "ascending eigenvalues for symmetric input (raises ValueError otherwise)");
  m.def("eigvals_naive", [](const py::handle& a) { return eigvals_naive(to_mat(a)); },
        "ascending eigenvalues from the textbook invariant formulas");

  m.def("i1", [](const py::handle& a) { return i1(to_mat(a)); });
  m.def("j2_stable", [](const py::handle& a) { return j2_stable(to_mat(a)); });
  m.def("j2_naive", [](const py::handle& a) { return j2_naive(to_mat(a)); });
  m.def("j2_tensor", [](const py::handle& a) { return j2_tensor(to_mat(a)); });
  m.def("j3_stable", [](const py::handle& a) { return j3_stable(to_mat(a)); });
  m.def("j3_naive", [](const py::handle& a) { return j3_naive(to_mat(a)); });
  m.def("j3_tensor", [](const py::handle& a) { return j3_tensor(to_mat(a)); });
  m.def("disc_stable", [](const py::handle& a) { return disc_stable(to_mat(a)); });
  m.def("disc_naive", &disc_naive, py::arg("j2"), py::arg("j3"));

  m.def("jacobian_j2", [](const py::handle& a) { return to_rows(jacobian_j2(to_mat(a))); });
  m.def("jacobian_j3", [](const py::handle& a) { return to_rows(jacobian_j3(to_mat(a))); });
  m.def("jacobian_disc",
        [](const py::handle& a) { return to_rows(jacobian_disc(to_mat(a))); });

  py::list all;
  for (const char* name :
       {"EigenTriple", "eps_mach", "eigvals", "eigvalss", "eigvals_naive", "i1", "j2_stable",
        "j2_naive", "j2_tensor", "j3_stable", "j3_naive", "j3_tensor", "disc_stable",
        "disc_naive", "jacobian_j2", "jacobian_j3", "jacobian_disc"})
    all.append(py::str(name));
  m.attr("__all__") = all;
}

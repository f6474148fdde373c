#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sclab/atoms.hpp"
#include "sclab/error.hpp"
#include "sclab/io.hpp"
#include "sclab/lab.hpp"
#include "sclab/lang_ops.hpp"
#include "sclab/witnesses.hpp"

namespace py = pybind11;
using namespace sclab;

namespace {

Word to_word(const std::string& s) { return word_from_string(s); }

BoolOp bool_op(const std::string& name) {
  auto op = parse_bool_op(name);
  if (!op) throw ParseError("unknown boolean operation: " + name);
  return *op;
}

py::dict record_dict(const lab::ComplexityRecord& r) {
  py::dict d;
  d["op"] = r.op;
  d["m"] = r.m;
  d["n"] = r.n;
  d["measured"] = r.measured;
  d["formula"] = r.formula;
  d["match"] = r.match;
  d["witness"] = r.witness_desc;
  d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_sclab, m) {
  m.doc() = "Quotient complexity of operations on languages over different alphabets";

  py::register_exception<ResourceError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const PreconditionError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Dfa>(m, "Dfa")
      .def(py::init([](std::size_t n, const std::string& alphabet, std::vector<State> table, State initial,
                       std::vector<State> finals) {
             return Dfa(n, Alphabet::from_string(alphabet), std::move(table), initial, std::move(finals));
           }),
           py::arg("states"), py::arg("alphabet"), py::arg("table"), py::arg("initial"), py::arg("finals"),
           "table is letter-major: table[x * states + q] is the image of q under letter x")
      .def_static("from_json", [](const std::string& text) { return parse_dfa(text); })
      .def("to_json", [](const Dfa& d) { return serialize(d); })
      .def("to_dot", [](const Dfa& d, const std::string& name) { return to_dot(d, name); }, py::arg("name") = "dfa")
      .def_property_readonly("size", &Dfa::size)
      .def_property_readonly("alphabet", [](const Dfa& d) {
        std::string s;
        for (Letter x : d.alphabet()) s += x.symbol;
        return s;
      })
      .def_property_readonly("initial", &Dfa::initial)
      .def_property_readonly("finals", &Dfa::finals)
      .def("accepts", [](const Dfa& d, const std::string& w) { return in_language(d, to_word(w)); })
      .def("__len__", &Dfa::size)
      .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; })
      .def("__repr__", [](const Dfa& d) {
        return "<Dfa states=" + std::to_string(d.size()) + " alphabet=" + d.alphabet().to_string() + ">";
      });

  m.def("universal_witness", &universal_witness, py::arg("n"));
  m.def("witness", &witness, py::arg("n"), py::arg("dialect"));
  m.def("minimize", &minimize);
  m.def("quotient_complexity", &quotient_complexity);
  m.def("equivalent", &equivalent);
  m.def("effective_alphabet", [](const Dfa& d) {
    std::string s;
    for (Letter x : effective_alphabet(d)) s += x.symbol;
    return s;
  });

  m.def("boolean_op", [](const Dfa& l, const Dfa& r, const std::string& op) { return boolean_op(l, r, bool_op(op)); },
        py::arg("left"), py::arg("right"), py::arg("op"));
  m.def("concat", &concat, py::arg("left"), py::arg("right"), py::arg("budget") = kDefaultSubsetBudget);
  m.def("star", &star, py::arg("dfa"), py::arg("budget") = kDefaultSubsetBudget);
  m.def("reverse", &reverse, py::arg("dfa"), py::arg("budget") = kDefaultSubsetBudget);

  m.def("syntactic_semigroup_size", py::overload_cast<const Dfa&>(&syntactic_semigroup_size));
  m.def("atom_formula", &atom_formula, py::arg("n"), py::arg("s"));
  m.def(
      "atoms",
      [](const Dfa& d, std::size_t budget) {
        const AtomReport r = atoms(d, budget);
        py::list out;
        for (const auto& a : r.atoms) {
          py::dict e;
          e["S"] = a.set.members();
          e["nonempty"] = a.nonempty;
          e["kappa"] = a.measured_kappa;
          out.append(e);
        }
        return out;
      },
      py::arg("dfa"), py::arg("budget") = kDefaultTupleBudget);

  m.def(
      "formula",
      [](const std::string& op, std::size_t mm, std::size_t n) {
        auto parsed = lab::parse_op(op);
        if (!parsed) throw ParseError("unknown operation: " + op);
        return lab::FormulaTable::value(*parsed, mm, n);
      },
      py::arg("op"), py::arg("m"), py::arg("n"));
  m.def(
      "verify",
      [](const std::vector<std::string>& ops, std::optional<std::string> mr, std::optional<std::string> nr) {
        std::vector<lab::Op> parsed;
        for (const auto& name : ops) {
          auto op = lab::parse_op(name);
          if (!op) throw ParseError("unknown operation: " + name);
          parsed.push_back(*op);
        }
        std::optional<lab::Range> m_range, n_range;
        if (mr) m_range = lab::Range::parse(*mr);
        if (nr) n_range = lab::Range::parse(*nr);
        std::vector<lab::ComplexityRecord> records;
        {
          py::gil_scoped_release release;
          records = lab::verify(lab::grid(parsed, m_range, n_range), lab::config_from_environment());
        }
        py::list out;
        for (const auto& r : records) out.append(record_dict(r));
        return out;
      },
      py::arg("ops"), py::arg("m") = py::none(), py::arg("n") = py::none());
}

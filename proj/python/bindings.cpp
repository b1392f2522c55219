#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringrange/element_class.hpp"
#include "ringrange/harness.hpp"
#include "ringrange/ideal.hpp"
#include "ringrange/properties.hpp"
#include "ringrange/quotient.hpp"
#include "ringrange/transformers.hpp"

namespace py = pybind11;
using namespace ringrange;

namespace {

// Elements cross the boundary as their printed names.
class PyRing {
 public:
  explicit PyRing(const std::string& spec) : ring_(Ring::realize(spec)) {}

  std::string label() const { return ring_->label(); }
  std::size_t order() const { return ring_->order(); }
  Element el(const std::string& text) const { return ring_->parse_element(text); }
  std::string str(Element e) const { return ring_->format(e); }

  std::vector<std::string> names(const std::vector<Code>& codes) const {
    std::vector<std::string> out;
    for (Code c : codes) out.push_back(ring_->format(c));
    return out;
  }
  std::vector<std::string> elements() const {
    std::vector<std::string> out;
    for (Element e : ring_->elements()) out.push_back(str(e));
    return out;
  }

  py::dict verdict(const std::string& property, bool cross_check) const {
    const auto id = parse_property(property);
    if (!id) throw py::value_error("unknown property " + property);
    DecideOptions opt;
    opt.cross_check = cross_check;
    const Verdict v = decide(*id, *ring_, opt);
    py::dict out;
    out["property"] = std::string(property_name(v.property));
    out["holds"] = v.holds;
    py::dict witness;
    for (const auto& [k, val] : format_witness(*ring_, v.witness)) witness[py::str(k)] = val;
    out["witness"] = witness;
    return out;
  }

  py::dict vnr(const std::string& a) const {
    const auto d = vnr_decompose(*ring_, el(a));
    py::dict out;
    out["x"] = str(d.x);
    out["e"] = str(d.e);
    out["u"] = str(d.u);
    return out;
  }

  py::dict sh(const std::string& a) const {
    const auto d = sh_decompose(*ring_, el(a));
    py::dict out;
    out["phi"] = str(d.phi);
    out["e"] = str(d.e);
    out["r"] = str(d.r);
    return out;
  }

  std::optional<py::dict> bezout(const std::string& a, const std::string& b) const {
    const auto w = bezout_pair(*ring_, el(a), el(b));
    if (!w) return std::nullopt;
    py::dict out;
    out["d"] = str(w->d);
    out["a0"] = str(w->a0);
    out["b0"] = str(w->b0);
    out["x"] = str(w->x);
    out["y"] = str(w->y);
    return out;
  }

  std::string sr1_from_vnr(const std::string& a, const std::string& b, const std::string& y) const {
    return str(witness_sr1_from_vnr(*ring_, el(a), el(b), el(y)));
  }
  std::string regular_from_sh(const std::string& a, const std::string& b,
                              const std::string& y) const {
    return str(witness_regular_from_sh(*ring_, el(a), el(b), el(y)));
  }

  std::string analyze() const { return to_json(property_vector(ring_)); }
  std::string q_check() const { return to_json(check_q_theorems(ring_)); }

  const Ring& ring() const { return *ring_; }

 private:
  Ring::Ptr ring_;
};

std::string corpus(std::optional<std::uint64_t> max_order, std::uint32_t max_modular_n,
                   std::uint64_t product_order_cap, std::size_t sr2_cap, unsigned threads,
                   const std::string& format) {
  CorpusConfig cfg;
  cfg.max_order = max_order;
  cfg.max_modular_n = max_modular_n;
  cfg.product_order_cap = product_order_cap;
  cfg.sr2_cap = sr2_cap;
  cfg.threads = threads;
  if (format != "json" && format != "csv") throw py::value_error("format must be json or csv");
  py::gil_scoped_release release;
  const CorpusReport report = run_corpus(cfg);
  return format == "json" ? to_json(report) : to_csv(report);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite commutative rings: range conditions, decompositions, quotient rings.";

  py::register_exception<DecompositionError>(m, "DecompositionError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<PyRing>(m, "Ring")
      .def(py::init<const std::string&>(), py::arg("spec"))
      .def_property_readonly("label", &PyRing::label)
      .def_property_readonly("order", &PyRing::order)
      .def("__len__", &PyRing::order)
      .def("__repr__", [](const PyRing& r) { return "Ring('" + r.label() + "')"; })
      .def("elements", &PyRing::elements)
      .def("units", [](const PyRing& r) { return r.names(r.ring().units().members); })
      .def("idempotents", [](const PyRing& r) { return r.names(r.ring().idempotents().members); })
      .def("regulars", [](const PyRing& r) { return r.names(r.ring().regulars().members); })
      .def("add", [](const PyRing& r, const std::string& a, const std::string& b) {
        return r.str(r.ring().add(r.el(a), r.el(b)));
      })
      .def("mul", [](const PyRing& r, const std::string& a, const std::string& b) {
        return r.str(r.ring().mul(r.el(a), r.el(b)));
      })
      .def("sub", [](const PyRing& r, const std::string& a, const std::string& b) {
        return r.str(r.ring().sub(r.el(a), r.el(b)));
      })
      .def("decide", &PyRing::verdict, py::arg("property"), py::arg("cross_check") = false)
      .def("vnr_decompose", &PyRing::vnr, py::arg("a"))
      .def("sh_decompose", &PyRing::sh, py::arg("a"))
      .def("bezout_pair", &PyRing::bezout, py::arg("a"), py::arg("b"))
      .def("witness_sr1_from_vnr", &PyRing::sr1_from_vnr, py::arg("a"), py::arg("b"), py::arg("y"))
      .def("witness_regular_from_sh", &PyRing::regular_from_sh, py::arg("a"), py::arg("b"),
           py::arg("y"))
      .def("_analyze_json", &PyRing::analyze)
      .def("_q_check_json", &PyRing::q_check);

  m.def("properties", [] {
    std::vector<std::string> out;
    for (PropertyId id : kAllProperties) out.emplace_back(property_name(id));
    return out;
  });
  m.def("_corpus", &corpus, py::arg("max_order") = std::nullopt, py::arg("max_modular_n") = 100,
        py::arg("product_order_cap") = 100, py::arg("sr2_cap") = 64, py::arg("threads") = 0,
        py::arg("format") = "json");
}

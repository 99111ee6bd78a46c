#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crystal/crystal_graph.hpp"
#include "crystal/embedding.hpp"
#include "crystal/json_io.hpp"
#include "crystal/skew_rsk.hpp"
#include "crystal/verify.hpp"

namespace py = pybind11;

namespace {

using crystal::json;

// The python surface speaks the same JSON documents as the CLI; values cross
// the boundary as JSON text.
std::string embed_json(const std::string& tableau, int n, int sink, int d) {
  auto s = crystal::tableau_from_json(json::parse(tableau));
  return crystal::to_json(crystal::embed(s, crystal::Quiver(n, sink), d)).dump();
}

std::string transition_json(const std::string& datum, int n, int sink) {
  auto c = crystal::datum_from_json(json::parse(datum));
  return crystal::to_json(crystal::transition(c, crystal::Quiver(n, sink))).dump();
}

py::object apply_operator_json(const std::string& datum, int i, const std::string& dir,
                               const std::string& method) {
  auto c = crystal::datum_from_json(json::parse(datum));
  crystal::Dir d = dir == "raise" ? crystal::Dir::raise_op : crystal::Dir::lower_op;
  auto res = method == "tensor" ? crystal::apply_tensor(c, i, d)
                                : crystal::apply_direct(c, i, d);
  if (!res) return py::none();
  return py::str(crystal::to_json(*res).dump());
}

std::pair<std::string, std::string> skew_rsk_json(const std::string& tableau,
                                                  const std::string& matrix) {
  auto pq = crystal::skew_rsk(crystal::tableau_from_json(json::parse(tableau)),
                              crystal::matrix_from_json(json::parse(matrix)));
  return {crystal::to_json(pq.p).dump(), crystal::to_json(pq.q).dump()};
}

std::pair<std::string, std::string> skew_rsk_inverse_json(const std::string& p,
                                                          const std::string& q) {
  auto pre = crystal::skew_rsk_inverse(crystal::tableau_from_json(json::parse(p)),
                                       crystal::tableau_from_json(json::parse(q)));
  return {crystal::to_json(pre.t).dump(), crystal::to_json(pre.m).dump()};
}

std::string rectify_json(const std::string& tableau) {
  return crystal::to_json(crystal::rectify(crystal::tableau_from_json(json::parse(tableau))))
      .dump();
}

std::string crystal_graph_json(const std::vector<int>& lambda, int n) {
  crystal::TableauCrystal tc{crystal::Alphabet::unbarred(n)};
  auto g = crystal::generate(
      tc, crystal::Tableau::highest_weight(crystal::Partition(lambda), tc.alphabet));
  return crystal::graph_to_json(g, [](const crystal::Tableau& t) {
           return crystal::to_json(t);
         }).dump();
}

bool verify_suites() {
  for (const auto& r : crystal::verify_all())
    if (!r.ok()) return false;
  return true;
}

}  // namespace

PYBIND11_MODULE(crystalpbw, m) {
  m.doc() = "type A crystals on Young tableaux and Lusztig data";
  m.def("embed", &embed_json, py::arg("tableau"), py::arg("n"), py::arg("sink"),
        py::arg("d") = -1, "Lusztig datum of a tableau JSON document");
  m.def("transition", &transition_json, py::arg("datum"), py::arg("n"), py::arg("sink"),
        "change of single-sink parametrization");
  m.def("apply_operator", &apply_operator_json, py::arg("datum"), py::arg("i"),
        py::arg("dir"), py::arg("method") = "direct",
        "Kashiwara operator on a datum; None when killed");
  m.def("skew_rsk", &skew_rsk_json, py::arg("tableau"), py::arg("matrix"));
  m.def("skew_rsk_inverse", &skew_rsk_inverse_json, py::arg("p"), py::arg("q"));
  m.def("rectify", &rectify_json, py::arg("tableau"));
  m.def("crystal_graph", &crystal_graph_json, py::arg("lam"), py::arg("n"));
  m.def("verify", &verify_suites, "run the property suites, True when all pass");
}

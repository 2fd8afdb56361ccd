#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <random>

#include "setcodes/bounds.hpp"
#include "setcodes/channel.hpp"
#include "setcodes/constructions.hpp"
#include "setcodes/sequence.hpp"
#include "setcodes/setfile.hpp"
#include "setcodes/verify.hpp"

namespace py = pybind11;
using namespace setcodes;

namespace {

SeqSet strings_to_set(const std::vector<std::string>& words, int q) {
  SeqSet set;
  for (const std::string& w : words) set.push_back(parse_sequence(w, q));
  normalize(set);
  return set;
}

std::vector<std::string> set_to_strings(const SeqSet& set) {
  std::vector<std::string> words;
  for (const Sequence& x : set) words.push_back(seq_to_string(x));
  return words;
}

std::unique_ptr<Construction> make_construction(const std::string& name,
                                                const py::kwargs& kwargs) {
  auto get = [&](const char* key, int fallback) {
    return kwargs.contains(key) ? kwargs[key].cast<int>() : fallback;
  };
  const int M = get("M", 0), L = get("L", 0);
  if (name == "c1")
    return std::make_unique<C1Code>(
        M, L, get("delta", 0),
        parse_decode_mode(kwargs.contains("mode")
                              ? kwargs["mode"].cast<std::string>()
                              : "L"));
  if (name == "c2") {
    auto code = std::make_unique<C2Code>(L, M, get("s", 0), get("t", 0));
    if (kwargs.contains("best_coset") && kwargs["best_coset"].cast<bool>())
      code->set_coset(code->best_coset());
    return code;
  }
  if (name == "c3")
    return std::make_unique<C3Code>(
        M, L, kwargs.contains("c") ? kwargs["c"].cast<double>() : 0.0,
        get("delta", 0));
  if (name == "c4") {
    int m = 0;
    while ((1 << m) < L + 1) ++m;
    BchCode inner(m, L, get("inner_eps", 1));
    const int outerL = inner.k();
    auto outer = std::make_shared<C1Code>(M, outerL, get("delta", 0));
    return std::make_unique<C4Code>(std::move(inner), std::move(outer), outerL);
  }
  if (name == "c5") return std::make_unique<C5Code>(M, L, get("a", 0));
  if (name == "c6") return std::make_unique<C6Code>(M, L, get("a", 0));
  if (name == "c7") return std::make_unique<C7Code>(M, L, get("eps", 1));
  throw std::invalid_argument("unknown construction: " + name);
}

}  // namespace

PYBIND11_MODULE(_setcodes, m) {
  m.doc() = "error-correcting codes over unordered sets of sequences";

  py::register_exception<EnumCapExceeded>(m, "EnumCapExceeded");

  py::class_<Construction>(m, "Construction")
      .def_property_readonly("name", &Construction::name)
      .def_property_readonly("info_bits", &Construction::info_bits)
      .def(
          "encode",
          [](const Construction& self, const std::vector<std::uint8_t>& info) {
            return set_to_strings(self.encode(info).seqs);
          },
          py::arg("info"))
      .def("decode",
           [](const Construction& self, const std::vector<std::string>& words,
              int q) -> std::optional<std::vector<std::uint8_t>> {
             return self.decode(strings_to_set(words, q));
           },
           py::arg("words"), py::arg("q") = 2)
      .def(
          "sample_info",
          [](const Construction& self, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return self.sample_info(rng);
          },
          py::arg("seed"));

  m.def("make_construction", &make_construction, py::arg("name"),
        "construction handle from keyword parameters (M, L, delta, ...)");

  m.def(
      "enumerate_ball",
      [](const std::string& word, int q, int eps, const std::string& type) {
        return set_to_strings(
            enumerate_ball(parse_sequence(word, q), eps, parse_error_type(type)));
      },
      py::arg("word"), py::arg("q"), py::arg("eps"), py::arg("type"));
  m.def(
      "enumerate_sphere",
      [](const std::string& word, int q, int eps, const std::string& type) {
        return set_to_strings(enumerate_sphere(parse_sequence(word, q), eps,
                                               parse_error_type(type)));
      },
      py::arg("word"), py::arg("q"), py::arg("eps"), py::arg("type"));

  m.def(
      "sample_channel",
      [](const std::vector<std::string>& words, int q, int s, int t, int eps,
         const std::string& type, std::uint64_t seed) {
        return set_to_strings(sample_channel(strings_to_set(words, q), s, t,
                                             eps, parse_error_type(type), seed));
      },
      py::arg("words"), py::arg("q"), py::arg("s"), py::arg("t"),
      py::arg("eps"), py::arg("type"), py::arg("seed"));

  m.def(
      "is_correcting_code",
      [](const std::vector<std::vector<std::string>>& code, int q, int s,
         int t, int eps, const std::string& type) {
        std::vector<DataSet> sets;
        for (const auto& words : code)
          sets.push_back(make_dataset(strings_to_set(words, q)));
        const VerifyResult result =
            is_correcting_code(sets, s, t, eps, parse_error_type(type));
        py::dict out;
        out["correcting"] = result.correcting;
        out["witness"] = result.witness
                             ? py::object(py::cast(
                                   set_to_strings(result.witness->common)))
                             : py::object(py::none());
        return out;
      },
      py::arg("code"), py::arg("q"), py::arg("s"), py::arg("t"),
      py::arg("eps"), py::arg("type"));

  m.def("gv_arbitrary", &gv_arbitrary);
  m.def("sp_arbitrary", &sp_arbitrary);
  m.def("gv_sub", &gv_sub);
  m.def("indexing_redundancy", &indexing_redundancy);
  m.def("table2_text", &table2_text);
  m.def(
      "bounds_json",
      [](int M, int L, int s, int t, std::optional<int> eps,
         const std::string& type, bool asymptotic) {
        return bound_report_json(bound_report(M, L, s, t,
                                              eps.value_or(kUnboundedEps),
                                              parse_error_type(type),
                                              asymptotic));
      },
      py::arg("M"), py::arg("L"), py::arg("s"), py::arg("t"),
      py::arg("eps") = py::none(), py::arg("type") = "L",
      py::arg("asymptotic") = false);
  m.def(
      "simulate_json",
      [](const std::string& name, const py::kwargs& kwargs) {
        auto get = [&](const char* key, int fallback) {
          return kwargs.contains(key) ? kwargs[key].cast<int>() : fallback;
        };
        const auto code = make_construction(name, kwargs);
        return monte_carlo_json(monte_carlo(
            *code, get("s", 0), get("t", 0), get("eps", kUnboundedEps),
            parse_error_type(kwargs.contains("type")
                                 ? kwargs["type"].cast<std::string>()
                                 : "L"),
            get("trials", 100),
            kwargs.contains("seed") ? kwargs["seed"].cast<std::uint64_t>()
                                    : 0));
      },
      py::arg("name"));

  m.attr("UNBOUNDED_EPS") = kUnboundedEps;
}

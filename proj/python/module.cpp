// Copyright 2026 The invsp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Everything crosses the boundary as JSON text; the
// package wrapper turns it into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "invsp/affine_family.hpp"
#include "invsp/cli.hpp"
#include "invsp/construct.hpp"
#include "invsp/gapsearch.hpp"
#include "invsp/json_io.hpp"
#include "invsp/transform.hpp"

namespace py = pybind11;

namespace invsp {
namespace {

SignMode Mode(bool signed_h) { return signed_h ? SignMode::kSignedH : SignMode::kNonnegH; }

std::string BasicPoly(const std::string& group, const std::string& method) {
  const GroupSpec g = GroupSpec::Parse(group);
  if (method == "closed") return ToJson(BasicPolyClosed(g)).dump();
  if (method == "product") return ToJson(BasicPolyProduct(g.order(), g.weights())).dump();
  throw Error("method must be 'closed' or 'product'");
}

std::string Tensor(const std::string& group, const std::string& h, const std::optional<std::string>& f) {
  const GroupSpec g = GroupSpec::Parse(group);
  const Polynomial base = f ? PolynomialFromJson(ParseJson(*f)) : BasicPolynomial(g);
  const Polynomial big = TensorStep(base, PolynomialFromJson(ParseJson(h)));
  return Json{{"g", ToJson(big)}, {"report", ToJson(ValidateSpecial(g, big))}}.dump();
}

std::string Validate(const std::string& group, const std::string& poly) {
  return ToJson(ValidateSpecial(GroupSpec::Parse(group), PolynomialFromJson(ParseJson(poly)))).dump();
}

std::string Family(const std::string& group, int h_degree, bool signed_h) {
  return ToJson(BuildCoefficientFamily(GroupSpec::Parse(group), h_degree, Mode(signed_h))).dump();
}

std::string InstantiateJson(const std::string& family, const std::string& point) {
  const AffineFamily fam = FamilyFromJson(ParseJson(family));
  const std::vector<Rational> pt = PointFromJson(fam, ParseJson(point));
  Json j = Json::object();
  int l0 = 0;
  for (const Rational& v : EvaluateSlots(fam, pt)) l0 += v != 0;
  j["l0"] = l0;
  j["admissible"] = IsAdmissible(fam, pt);
  if (!fam.slots.empty() && fam.slots.front().monomial) j["g"] = ToJson(invsp::Instantiate(fam, pt));
  return j.dump();
}

std::string L0(const std::string& family, int cap, std::uint64_t budget, int jobs) {
  const AffineFamily fam = FamilyFromJson(ParseJson(family));
  L0Range r;
  {
    py::gil_scoped_release release;
    r = ComputeL0Range(fam, {cap, budget, jobs});
  }
  return ToJson(r, fam).dump();
}

std::string Achievable(const std::string& group, int max_degree, bool signed_h, int cap, std::uint64_t budget,
                       int jobs) {
  const GroupSpec g = GroupSpec::Parse(group);
  AchievabilityReport rep;
  {
    py::gil_scoped_release release;
    rep = AchievableSet(g, max_degree, Mode(signed_h), {budget, jobs}, cap);
  }
  return ToJson(rep).dump();
}

std::string Targets(const std::string& group, const std::set<int>& targets, int max_degree, bool signed_h,
                    std::uint64_t budget, int jobs) {
  const GroupSpec g = GroupSpec::Parse(group);
  TargetSearchReport rep;
  {
    py::gil_scoped_release release;
    rep = SearchTargets(g, targets, max_degree, Mode(signed_h), {budget, jobs});
  }
  return ToJson(rep).dump();
}

py::tuple RunCli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::Run(args, in, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace
}  // namespace invsp

PYBIND11_MODULE(_invsp, m) {
  using namespace invsp;
  m.doc() = "Special invariant polynomials (native layer)";

  static py::exception<Error> base_error(m, "Error", PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const Error& e) {
      base_error(e.what());
    }
  });

  m.attr("DEFAULT_BUDGET") = kDefaultBudget;
  m.def("basic_poly", &BasicPoly, py::arg("group"), py::arg("method") = "closed");
  m.def("tensor", &Tensor, py::arg("group"), py::arg("h"), py::arg("f") = std::nullopt);
  m.def("validate", &Validate, py::arg("group"), py::arg("poly"));
  m.def("family", &Family, py::arg("group"), py::arg("h_degree"), py::arg("signed_h") = false);
  m.def("instantiate", &InstantiateJson, py::arg("family"), py::arg("point"));
  m.def("l0_range", &L0, py::arg("family"), py::arg("cap") = -1, py::arg("budget") = kDefaultBudget,
        py::arg("jobs") = 1);
  m.def("achievable_set", &Achievable, py::arg("group"), py::arg("max_degree"), py::arg("signed_h") = false,
        py::arg("cap") = -1, py::arg("budget") = kDefaultBudget, py::arg("jobs") = 1);
  m.def("search_targets", &Targets, py::arg("group"), py::arg("targets"), py::arg("max_degree"),
        py::arg("signed_h") = false, py::arg("budget") = kDefaultBudget, py::arg("jobs") = 1);
  m.def("closure_values", &ClosureValues, py::arg("base"), py::arg("bound"));
  m.def("is_prime", &IsPrime);
  m.def("mod_reduction_check", &ModReductionCheck);
  m.def("run_cli", &RunCli, py::arg("args"), py::arg("input") = "");
}

#include "curling/cli.hpp"
#include "curling/cn1.hpp"
#include "curling/curl.hpp"
#include "curling/error.hpp"
#include "curling/search.hpp"
#include "curling/tables.hpp"
#include "curling/tails.hpp"
#include "curling/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace curling;

namespace {

py::int_ big(const BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(v.str())); }

// Accepts "2323", "0,1,2" or a list of ints.
IntSeq as_seq(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_sequence(o.cast<std::string>());
  return o.cast<IntSeq>();
}

py::dict report_dict(const SearchReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["omega"] = r.omega;
  d["best"] = format_binary(r.best);
  d["achievers"] = r.achiever_count;
  d["mode"] = std::string(to_string(r.mode));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Curling numbers, tail lengths and their counting tables";
  py::register_exception<Error>(m, "CurlingError", PyExc_ValueError);

  m.def("curling_number", [](const py::object& s) {
    const auto r = curling_number(as_seq(s));
    return py::make_tuple(r.k, r.pi);
  }, py::arg("seq"));

  m.def("extend", [](const py::object& s, std::size_t step_limit) {
    const auto r = extend_to_tail(as_seq(s), step_limit);
    return py::make_tuple(r.tau, r.extension);
  }, py::arg("seq"), py::arg("step_limit") = kDefaultStepLimit);

  m.def("gijswijt", [](std::size_t n) { return gijswijt_prefix(n); }, py::arg("n"));

  m.def("omega", [](int n, const std::string& mode, unsigned threads) {
    SearchOptions so;
    so.threads = threads;
    SearchReport r;
    {
      py::gil_scoped_release release;
      r = omega_search(n, parse_search_mode(mode), so);
    }
    return report_dict(r);
  }, py::arg("n"), py::arg("mode") = "exhaustive", py::arg("threads") = 0);

  m.def("jump_points", [](int n_max, const std::string& mode, unsigned threads) {
    SearchOptions so;
    so.threads = threads;
    py::gil_scoped_release release;
    return jump_points(n_max, parse_search_mode(mode), so);
  }, py::arg("n_max"), py::arg("mode") = "exhaustive", py::arg("threads") = 0);

  m.def("table", [](const std::string& name, int n_max, unsigned threads) {
    const auto t = parse_table(name);
    CountTables tables;
    {
      py::gil_scoped_release release;
      tables = brute_tables(n_max, threads);
    }
    std::vector<std::vector<std::int64_t>> rows;
    for (int n = t == Table::d ? 2 : 1; n <= n_max; ++n) {
      std::vector<std::int64_t> row;
      for (int k = 1; k <= n; ++k) row.push_back(t == Table::d ? d_value(n, k, DMethod::definition, tables) : tables.get(t, n, k));
      rows.push_back(std::move(row));
    }
    return rows;
  }, py::arg("name"), py::arg("n_max"), py::arg("threads") = 0);

  m.def("c1", [](int n_max, int e_cap) {
    Cn1Engine engine(e_cap);
    std::vector<C1Entry> entries;
    {
      py::gil_scoped_release release;
      entries = c1_recursive(n_max, engine);
    }
    py::list out;
    for (const auto& e : entries) out.append(big(e.value));
    return out;
  }, py::arg("n_max"), py::arg("e_cap") = kDefaultEBruteCap);

  m.def("tail_row", [](int n, unsigned threads) {
    TailOptions to;
    to.threads = threads;
    TailRow r;
    {
      py::gil_scoped_release release;
      r = tail_row(n, to);
    }
    return py::make_tuple(r.counts, big(boost::multiprecision::numerator(r.mean)),
                          big(boost::multiprecision::denominator(r.mean)));
  }, py::arg("n"), py::arg("threads") = 0);

  m.def("rotten_count", [](int n) { return rotten_scan(n).rotten_count; }, py::arg("n"));
  m.def("essential_count", [](int n) { return essential_first_scan(n); }, py::arg("n"));

  m.def("verify", [](const std::string& suite, int omega_max, int sweep_max, int brute_max, int c1_max) {
    VerifyOptions o;
    o.omega_max = omega_max;
    o.sweep_max = sweep_max;
    o.brute_max = brute_max;
    o.c1_max = c1_max;
    VerifyReport report;
    {
      py::gil_scoped_release release;
      report = verify(parse_suite(suite), o);
    }
    py::list out;
    for (const auto& c : report.checks) {
      py::dict d;
      d["name"] = c.name;
      d["source"] = c.source;
      d["pass"] = c.pass;
      d["finding"] = c.finding;
      d["detail"] = c.detail;
      out.append(d);
    }
    return out;
  }, py::arg("suite") = "paper-tables", py::arg("omega_max") = 22, py::arg("sweep_max") = 16,
     py::arg("brute_max") = 24, py::arg("c1_max") = 100);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}

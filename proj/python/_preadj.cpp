#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "preadj/cli.hpp"
#include "preadj/fixture.hpp"
#include "preadj/metric.hpp"
#include "preadj/oracle.hpp"
#include "preadj/pa.hpp"
#include "preadj/param_words.hpp"

namespace py = pybind11;

namespace {

preadj::AlphabetPtr alphabet_of(const std::string& letters)
{
    return std::make_shared<const preadj::Alphabet>(preadj::Alphabet::parse_list(letters));
}

py::dict counts_dict(const preadj::ArrowCounts& c)
{
    py::dict d;
    d["hom_AC"] = c.hom_ac;
    d["hom_BC"] = c.hom_bc;
    d["hom_AB"] = c.hom_ab;
    d["colorings_checked"] = c.colorings_checked;
    return d;
}

} // namespace

PYBIND11_MODULE(_preadj, m)
{
    m.doc() = "Pre-adjunction constructions and exhaustive Ramsey checks";

    static py::exception<preadj::DomainError> domain_error(m, "DomainError", PyExc_ValueError);
    static py::exception<preadj::BudgetExceeded> budget_error(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const preadj::DomainError& e) {
            py::set_error(domain_error, e.what());
        } catch (const preadj::BudgetExceeded& e) {
            py::set_error(budget_error, e.what());
        }
    });

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int status = 0;
            {
                py::gil_scoped_release release;
                status = preadj::run_cli(args, out, err);
            }
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"), "Runs one preadj command line; returns (status, stdout, stderr).");

    m.def(
        "compose",
        [](const std::string& u, const std::string& v, const std::string& alphabet) {
            const auto a = alphabet_of(alphabet);
            return preadj::compose(preadj::ParameterWord::parse(u, a), preadj::ParameterWord::parse(v, a)).to_string();
        },
        py::arg("u"), py::arg("v"), py::arg("alphabet") = "0");

    m.def(
        "enumerate_words",
        [](int n, int params, const std::string& alphabet, std::uint64_t bound) {
            std::vector<std::string> out;
            for (const auto& w : preadj::enumerate_words(alphabet_of(alphabet), n, params, bound))
                out.push_back(w.to_string());
            return out;
        },
        py::arg("n"), py::arg("m"), py::arg("alphabet") = "0", py::arg("bound") = 100000);

    m.def(
        "tight_complete",
        [](const std::string& values) {
            const auto s = preadj::parse_rational_list(values);
            return preadj::format_rational_list(preadj::tight_complete(s).values);
        },
        py::arg("values"));

    m.def(
        "is_tight", [](const std::string& values) { return preadj::is_tight(preadj::parse_rational_list(values)); },
        py::arg("values"));

    m.def(
        "decide_gr",
        [](int n, int params, int ell, int k, const std::string& alphabet) {
            preadj::ArrowVerdict v;
            {
                py::gil_scoped_release release;
                v = preadj::decide_gr(alphabet_of(alphabet), n, params, ell, k, preadj::Budget{});
            }
            py::dict d;
            d["holds"] = v.holds;
            d["bad_coloring"] = v.bad_coloring ? py::cast(*v.bad_coloring) : py::none();
            d["counts"] = counts_dict(v.counts);
            return d;
        },
        py::arg("n"), py::arg("m"), py::arg("ell"), py::arg("k") = 2, py::arg("alphabet") = "0");

    m.def(
        "worked_example",
        [](std::optional<std::string> corrupt) {
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (const auto& c : preadj::run_worked_example(corrupt))
                out.emplace_back(c.name, c.expected, c.actual);
            return out;
        },
        py::arg("corrupt") = py::none());

    m.def(
        "pa_random_suite",
        [](const std::string& kind, int trials, std::uint64_t seed) {
            preadj::PaReport r;
            {
                py::gil_scoped_release release;
                r = preadj::pa_random_suite(preadj::parse_structure_kind(kind), trials, seed);
            }
            py::dict d;
            d["trials"] = r.trials;
            d["phi_failures"] = r.phi_failures;
            d["witness_failures"] = r.witness_failures;
            d["equation_failures"] = r.equation_failures;
            py::list seeds;
            for (const auto& t : r.failures)
                seeds.append(t.seed);
            d["failing_seeds"] = seeds;
            return d;
        },
        py::arg("kind"), py::arg("trials") = 200, py::arg("seed") = 0);
}

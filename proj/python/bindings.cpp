#include "coquecigrue/errors.hpp"
#include "coquecigrue/io.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Leibniz/Lie algebra toolkit core";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const coquecigrue::ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const coquecigrue::ValidationError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const coquecigrue::Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def(
        "run_json",
        [](const std::string& command, const std::string& text, unsigned order, unsigned degree,
           const std::string& triv, const std::string& name) {
            coquecigrue::InputDocument doc = coquecigrue::parse_document_text(text, name);
            coquecigrue::RunOptions options;
            options.order = order;
            options.degree = degree;
            options.triv = triv;
            return coquecigrue::run_command(command, doc, options).to_json();
        },
        py::arg("command"), py::arg("text"), py::arg("order") = 4, py::arg("degree") = 3,
        py::arg("triv") = "left", py::arg("name") = "<memory>",
        "Run a command (check, liezation, envelope, integrate, oracle) on an "
        "algebra description and return the JSON report as a string.");

    m.attr("__version__") = "0.1.0";
}

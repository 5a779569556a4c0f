#pragma once

#include "coquecigrue/algebra.hpp"
#include "coquecigrue/io.hpp"
#include "coquecigrue/lm.hpp"

#include <string>

inline coquecigrue::InputDocument load_fixture(const std::string& stem) {
    return coquecigrue::parse_input(std::string(FIXTURES_DIR) + "/" + stem + ".alg");
}

inline coquecigrue::AlgebraPresentation fixture_algebra(const std::string& stem) {
    return coquecigrue::algebra_from_document(load_fixture(stem));
}

inline coquecigrue::LMLieAlgebra fixture_lm(const std::string& stem) {
    coquecigrue::InputDocument doc = load_fixture(stem);
    if (doc.kind == "lm")
        return coquecigrue::lm_algebra_from_document(doc);
    return coquecigrue::lm_from_leibniz(coquecigrue::algebra_from_document(doc));
}

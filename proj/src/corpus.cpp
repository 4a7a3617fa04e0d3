#include "bcwb/corpus.hpp"

#include <map>

#include "bcwb/parser.hpp"

namespace bcwb {

namespace {

const std::map<std::string, std::string>& corpus() {
    static const std::map<std::string, std::string> models = {
        {"torus1",
         "# complex torus T^1\n"
         "model torus1 {\n"
         "  dim 1\n"
         "  d w1 = 0\n"
         "}\n"},
        {"torus2",
         "# complex torus T^2\n"
         "model torus2 {\n"
         "  dim 2\n"
         "  d w1 = 0\n"
         "  d w2 = 0\n"
         "}\n"},
        {"torus3",
         "# complex torus T^3\n"
         "model torus3 {\n"
         "  dim 3\n"
         "  d w1 = 0\n"
         "  d w2 = 0\n"
         "  d w3 = 0\n"
         "}\n"},
        {"kodaira_primary",
         "# primary Kodaira surface: real Heisenberg H(3;R) x R\n"
         "model kodaira_primary {\n"
         "  dim 2\n"
         "  d w1 = 0\n"
         "  d w2 = w1^cw1\n"
         "}\n"},
        {"iwasawa",
         "# Iwasawa manifold: complex Heisenberg H(3;C) / Gaussian-integer lattice\n"
         "model iwasawa {\n"
         "  dim 3\n"
         "  d w1 = 0\n"
         "  d w2 = 0\n"
         "  d w3 = - w1^w2\n"
         "}\n"},
        {"h6",
         "# nilmanifold with Lie algebra h6\n"
         "model h6 {\n"
         "  dim 3\n"
         "  d w1 = 0\n"
         "  d w2 = 0\n"
         "  d w3 = w1^w2 + w1^cw1 + w1^cw2\n"
         "}\n"},
        {"h7",
         "# nilmanifold with Lie algebra h7\n"
         "model h7 {\n"
         "  dim 3\n"
         "  d w1 = 0\n"
         "  d w2 = w1^cw1\n"
         "  d w3 = w1^w2 + w1^cw2\n"
         "}\n"},
    };
    return models;
}

}  // namespace

std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (const auto& [name, src] : corpus()) names.push_back(name);
    return names;
}

bool corpus_has(const std::string& name) { return corpus().count(name) > 0; }

const std::string& corpus_source(const std::string& name) {
    auto it = corpus().find(name);
    if (it == corpus().end())
        throw Error(ErrorKind::IndexOutOfRange, "unknown corpus model '" + name + "'");
    return it->second;
}

LieModel corpus_model(const std::string& name) { return parse_model(corpus_source(name)); }

}  // namespace bcwb

// Bundled structure-equation sources: tori, the Heisenberg-type models
// (Iwasawa, primary Kodaira) and the h6/h7 nilmanifolds.

#pragma once

#include <string>
#include <vector>

#include "bcwb/model.hpp"

namespace bcwb {

std::vector<std::string> corpus_names();
bool corpus_has(const std::string& name);
// Throws IndexOutOfRange on an unknown name.
const std::string& corpus_source(const std::string& name);
LieModel corpus_model(const std::string& name);

}  // namespace bcwb

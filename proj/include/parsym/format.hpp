#pragma once

// Text and JSON output for elements and reports. Terms are listed by degree,
// then by key text. Plain text is one "<coefficient> <key>" per line, or "0"
// for the zero element; tensor keys join their legs with " |x| ".

#include <string>

#include <json.hpp>

#include "parsym/free_hopf.hpp"
#include "parsym/hopf.hpp"
#include "parsym/nsym.hpp"
#include "parsym/subalgebra.hpp"

namespace parsym {

inline constexpr const char* kTensorSeparator = " |x| ";

std::string format_text(const ParSymElement& a);
std::string format_text(const TensorElement& t);
std::string format_text(const NSymElement& a);
std::string format_qsym_text(const QSymImage& q);

nlohmann::ordered_json format_json(const ParSymElement& a);
nlohmann::ordered_json format_json(const TensorElement& t);
nlohmann::ordered_json format_json(const NSymElement& a);
nlohmann::ordered_json format_qsym_json(const QSymImage& q);

std::string format_text(const hopf::HopfReport& r);
nlohmann::ordered_json format_json(const hopf::HopfReport& r);

std::string format_text(const ClosureReport& r);
nlohmann::ordered_json format_json(const ClosureReport& r);

}  // namespace parsym

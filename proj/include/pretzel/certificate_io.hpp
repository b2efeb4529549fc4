#pragma once

#include <string>

#include "pretzel/classifier.hpp"

namespace pretzel {

enum class CertificateFormat { kJson, kText };

/// "json" or "text"; throws std::invalid_argument otherwise.
CertificateFormat parse_format(const std::string& name);

/// Deterministic single-line JSON object, or a multi-line text report. With
/// `cite`, the text report appends each rule's citation and anchor; JSON
/// always carries them.
std::string emit_certificate(const Certificate& c, CertificateFormat format, bool cite = false);

/// Inverse of the JSON form. Throws std::invalid_argument on malformed input
/// or when the stored verdict disagrees with the one derived from the rules.
Certificate parse_certificate_json(const std::string& text);

}  // namespace pretzel

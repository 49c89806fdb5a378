#pragma once

#include <span>
#include <string>
#include <string_view>

namespace invograph {

// Reduces a URL or hostname to its lowercase registrable domain: scheme,
// credentials, port, path, query and fragment are dropped, then the host is
// cut down to one label beyond its public suffix. Multi-label suffixes come
// from a small built-in list (co.uk, com.au, ...); every other suffix is
// treated as a single label. Dotted IPv4 hosts are returned unchanged.
//
// Throws ParseError carrying the offending input when no valid host remains.
std::string normalize_domain(std::string_view raw);

// The built-in multi-label public suffixes, sorted.
std::span<const std::string_view> multi_label_suffixes();

}  // namespace invograph

#include "invograph/domain.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "invograph/error.hpp"

namespace invograph {

namespace {

// Second-level registries under country-code TLDs that show up in news data.
constexpr std::array<std::string_view, 40> kSuffixes = {
    "ac.jp",  "ac.nz",  "ac.uk",  "co.il",  "co.in",  "co.jp",  "co.kr",  "co.nz",
    "co.uk",  "co.za",  "com.ar", "com.au", "com.br", "com.cn", "com.co", "com.eg",
    "com.hk", "com.mx", "com.my", "com.ng", "com.pk", "com.sg", "com.tr", "com.tw",
    "com.ua", "edu.au", "gov.au", "gov.uk", "govt.nz", "ltd.uk", "me.uk", "ne.jp",
    "net.au", "net.nz", "or.jp",  "org.au", "org.nz", "org.uk", "plc.uk", "sch.uk",
};

bool is_label_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
}

bool is_ipv4(std::string_view host) {
    int dots = 0;
    for (char c : host) {
        if (c == '.') ++dots;
        else if (c < '0' || c > '9') return false;
    }
    return dots == 3;
}

[[noreturn]] void reject(std::string_view raw, std::string_view why) {
    throw ParseError("cannot normalize domain '" + std::string(raw) + "': " + std::string(why));
}

}  // namespace

std::span<const std::string_view> multi_label_suffixes() { return kSuffixes; }

std::string normalize_domain(std::string_view raw) {
    std::string_view rest = raw;
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
    if (rest.empty()) reject(raw, "empty input");

    if (auto scheme = rest.find("://"); scheme != std::string_view::npos) {
        rest.remove_prefix(scheme + 3);
    } else if (rest.starts_with("//")) {
        rest.remove_prefix(2);
    }
    rest = rest.substr(0, rest.find_first_of("/?#"));
    if (auto at = rest.rfind('@'); at != std::string_view::npos) rest.remove_prefix(at + 1);
    if (auto colon = rest.find(':'); colon != std::string_view::npos) rest = rest.substr(0, colon);
    while (!rest.empty() && rest.back() == '.') rest.remove_suffix(1);

    std::string host(rest);
    std::transform(host.begin(), host.end(), host.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (host.empty()) reject(raw, "no host");
    if (is_ipv4(host)) return host;

    std::vector<std::string_view> labels;
    std::string_view view = host;
    while (true) {
        const auto dot = view.find('.');
        const auto label = view.substr(0, dot);
        if (label.empty()) reject(raw, "empty label");
        if (!std::all_of(label.begin(), label.end(), is_label_char)) reject(raw, "invalid character");
        if (label.front() == '-' || label.back() == '-') reject(raw, "label starts or ends with '-'");
        labels.push_back(label);
        if (dot == std::string_view::npos) break;
        view.remove_prefix(dot + 1);
    }
    if (labels.size() < 2) reject(raw, "not a registrable domain");
    if (std::all_of(labels.back().begin(), labels.back().end(),
                    [](char c) { return c >= '0' && c <= '9'; })) {
        reject(raw, "numeric top-level label");
    }

    std::size_t keep = 2;
    const std::string tail = std::string(labels[labels.size() - 2]) + "." + std::string(labels.back());
    if (std::binary_search(kSuffixes.begin(), kSuffixes.end(), std::string_view(tail))) {
        if (labels.size() < 3) reject(raw, "bare public suffix");
        keep = 3;
    }
    std::string out;
    for (std::size_t i = labels.size() - keep; i < labels.size(); ++i) {
        if (!out.empty()) out += '.';
        out += labels[i];
    }
    return out;
}

}  // namespace invograph

#pragma once

#include <stdexcept>
#include <string>

namespace ldh {

// Every failure the library reports deliberately, as opposed to programming
// errors (those assert). The CLI maps these to exit status 2.
enum class errc {
    empty_edge,
    uncovered_vertex,
    not_sperner,
    not_connected,
    bad_vertex_id,
    bad_family_params,
    instance_too_large,
    bad_k,
    not_a_hypertree,
    no_construction_available,
    construction_precondition_failed,
    syntax_error,
    unknown_theorem,
    range_too_large,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] void fail(errc c, const std::string& msg);

} // namespace ldh

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "syncstr/construction.hpp"
#include "syncstr/harness.hpp"
#include "syncstr/insdel_code.hpp"
#include "syncstr/strings_core.hpp"
#include "syncstr/sync_properties.hpp"

namespace py = pybind11;
using namespace syncstr;

namespace {

SymbolString make_string(const std::vector<Symbol>& symbols, std::uint32_t q) {
    return SymbolString(symbols, q);
}

Rational rat(const std::string& s) { return Rational::parse(s); }

}  // namespace

PYBIND11_MODULE(_syncstr, m) {
    m.doc() = "synchronization strings, indexing decoders and insdel codes";

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const std::string& s) { return Rational::parse(s); }))
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; })
        .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; })
        .def("__float__", &Rational::to_double);

    py::class_<SymbolString>(m, "SymbolString")
        .def(py::init(&make_string), py::arg("symbols"), py::arg("alphabet_size"))
        .def_readonly("symbols", &SymbolString::symbols)
        .def_readonly("alphabet_size", &SymbolString::alphabet_size)
        .def("__len__", &SymbolString::size)
        .def("__eq__", [](const SymbolString& a, const SymbolString& b) { return a == b; });

    py::class_<MonotoneMatching>(m, "MonotoneMatching")
        .def_readonly("pairs", &MonotoneMatching::pairs)
        .def("good_pairs", &MonotoneMatching::good_pairs)
        .def("bad_pairs", &MonotoneMatching::bad_pairs)
        .def("__len__", &MonotoneMatching::size);

    py::class_<SyncString>(m, "SyncString")
        .def_readonly("body", &SyncString::body)
        .def_readonly("eps", &SyncString::eps)
        .def_readonly("seed", &SyncString::seed)
        .def_readonly("resamples", &SyncString::resamples)
        .def_readonly("retries", &SyncString::retries)
        .def_property_readonly("property",
                               [](const SyncString& s) { return to_string(s.property); });

    py::class_<DecodedIndices>(m, "DecodedIndices")
        .def_readonly("guesses", &DecodedIndices::guesses);

    py::class_<MisdecodingReport>(m, "MisdecodingReport")
        .def_readonly("transmitted_total", &MisdecodingReport::transmitted_total)
        .def_readonly("correctly_decoded", &MisdecodingReport::correctly_decoded)
        .def_readonly("misdecodings", &MisdecodingReport::misdecodings)
        .def_readonly("error_free_violations", &MisdecodingReport::error_free_violations);

    py::class_<Transcript>(m, "Transcript")
        .def_readonly("sent", &Transcript::sent)
        .def_readonly("received", &Transcript::received)
        .def_readonly("sent_of_received", &Transcript::sent_of_received)
        .def_property_readonly("insertions", [](const Transcript& t) { return t.insertions; })
        .def_property_readonly("deletions", [](const Transcript& t) { return t.deletions; });

    m.def("edit_distance", &edit_distance);
    m.def("longest_common_subsequence", &longest_common_subsequence);
    m.def("relative_suffix_distance",
          [](const SymbolString& a, const SymbolString& b) { return relative_suffix_distance(a, b).str(); });
    m.def("relative_suffix_pseudo_distance", [](const SymbolString& a, const SymbolString& b) {
        return relative_suffix_pseudo_distance(a, b).str();
    });

    m.def("check_synchronization", [](const SymbolString& s, const std::string& eps) {
        auto v = check_synchronization(s, rat(eps));
        py::dict out;
        out["holds"] = v.holds;
        if (v.violation)
            out["violation"] = py::make_tuple(v.violation->i, v.violation->j, v.violation->k, v.violation->ed);
        return out;
    });
    m.def("check_self_matching", [](const SymbolString& s, const std::string& eps) {
        auto v = check_self_matching(s, rat(eps));
        py::dict out;
        out["holds"] = v.holds;
        out["max_bad"] = v.max_bad;
        return out;
    });
    m.def("max_bad_self_matching", [](const SymbolString& s) {
        auto [count, witness] = max_bad_self_matching(s);
        return py::make_tuple(count, witness);
    });

    m.def("recommended_alphabet_size", [](const std::string& eps, const std::string& property) {
        return recommended_alphabet_size(rat(eps), property_from_string(property));
    });
    m.def("construct_sync_string", [](int n, const std::string& eps, std::uint64_t seed) {
        auto r = construct_sync_string(n, rat(eps), seed);
        if (!r.ok) throw std::runtime_error(r.error);
        return r.value;
    });
    m.def("construct_self_matching_string", [](int n, const std::string& eps, std::uint64_t seed) {
        auto r = construct_self_matching_string(n, rat(eps), seed);
        if (!r.ok) throw std::runtime_error(r.error);
        return r.value;
    });
    m.def("serialize_sync_string", &serialize_sync_string);
    m.def("parse_sync_string", &parse_sync_string);

    m.def("apply_uniform_channel",
          [](const SymbolString& sent, const std::string& delta, const std::string& mode,
             std::uint64_t seed) {
              Rng rng(seed);
              auto script = adversary_generate(AdversaryKind::uniform_random, sent, rat(delta),
                                               mode_from_string(mode), rng);
              return apply_script(sent, script);
          });

    m.def("decode_min_rsd", &decode_min_rsd);
    m.def("decode_min_rspd", [](const SymbolString& s, const std::string& eps, const SymbolString& r) {
        return decode_min_rspd(s, rat(eps), r);
    });
    m.def("decode_global", [](const SymbolString& s, const SymbolString& r, const std::string& beta) {
        return decode_global(s, r, rat(beta));
    });
    m.def("decode_deletion_greedy", &decode_deletion_greedy);
    m.def("decode_two_sided", [](const SymbolString& s, const SymbolString& r, const std::string& mode) {
        return decode_two_sided(s, r, mode == "ins_only" ? TwoSidedMode::ins_only : TwoSidedMode::del_only);
    });
    m.def("count_misdecodings", &count_misdecodings);

    py::class_<InsdelCode>(m, "InsdelCode")
        .def(py::init([](int n, const std::string& delta, const std::string& eps,
                         const std::string& decoder, const std::string& eps_prime,
                         const std::string& beta, int gf_m, int k_msg, const SyncString& sync) {
                 auto params = make_params(n, rat(delta), rat(eps), decoder_from_string(decoder),
                                           rat(eps_prime), rat(beta),
                                           static_cast<std::int64_t>(sync.body.alphabet_size), gf_m,
                                           k_msg);
                 return InsdelCode(params, sync);
             }),
             py::arg("n"), py::arg("delta"), py::arg("eps"), py::arg("decoder"), py::arg("eps_prime"),
             py::arg("beta"), py::arg("gf_m"), py::arg("k_msg"), py::arg("sync"))
        .def("encode", &InsdelCode::encode)
        .def("decode",
             [](const InsdelCode& c, const SymbolString& received) {
                 auto r = c.decode(received);
                 py::dict out;
                 out["ok"] = r.ok;
                 out["msg"] = r.msg;
                 out["erasures"] = r.erasures;
                 return out;
             })
        .def_property_readonly("rate", [](const InsdelCode& c) { return c.params().rate; })
        .def_property_readonly("radius", [](const InsdelCode& c) { return c.params().radius; })
        .def_property_readonly("k_msg", [](const InsdelCode& c) { return c.params().k_msg; });
}

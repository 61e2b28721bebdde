#include "tuttekit/fixtures.hpp"

#include <cctype>

#include "tuttekit/errors.hpp"

namespace tuttekit {

namespace {

class PolyParser {
  public:
    PolyParser(std::string_view text, const std::vector<std::string> &vars) : vars_(vars) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                s_.push_back(c);
            }
        }
    }

    MultiPoly parse() {
        MultiPoly out(vars_);
        if (s_.empty()) {
            throw PreconditionError("empty polynomial");
        }
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            out += term() * Rational(sign);
            first = false;
        }
        return out;
    }

  private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    [[noreturn]] void fail(const std::string &why) const {
        throw PreconditionError("cannot parse polynomial '" + s_ + "' at " + std::to_string(pos_) +
                                ": " + why);
    }

    unsigned number() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a number");
        }
        return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
    }

    MultiPoly term() {
        Rational coeff(1);
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos_;
            }
            coeff = Rational(BigInt(s_.substr(start, pos_ - start)));
            if (peek() == '/') {
                ++pos_;
                coeff = coeff * Rational(1, static_cast<long>(number()));
            }
            any = true;
        }
        Exponents exps(vars_.size(), 0);
        while (true) {
            if (peek() == '*') {
                ++pos_;
            }
            const std::size_t v = variable();
            if (v == vars_.size()) {
                break;
            }
            unsigned e = 1;
            if (peek() == '^') {
                ++pos_;
                if (peek() == '{') {
                    ++pos_;
                    e = number();
                    if (peek() != '}') {
                        fail("expected '}'");
                    }
                    ++pos_;
                } else {
                    e = number();
                }
            }
            exps[v] += e;
            any = true;
        }
        if (!any) {
            fail("expected a term");
        }
        return MultiPoly::monomial(vars_, exps, coeff);
    }

    /// Longest variable name at the cursor; vars_.size() when none.
    std::size_t variable() {
        std::size_t best = vars_.size(), best_len = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const auto &name = vars_[i];
            if (name.size() > best_len && s_.compare(pos_, name.size(), name) == 0) {
                best = i;
                best_len = name.size();
            }
        }
        pos_ += best_len;
        return best;
    }

    std::string s_;
    const std::vector<std::string> &vars_;
    std::size_t pos_ = 0;
};

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kQ{"q"};
const std::vector<std::string> kT{"t"};

const char *const kTutteTable = "table 'Arithmetic Tutte polynomial in the weight lattice'";
const char *const kCharTable = "table 'Characteristic Polynomial / Ehrhart Polynomial' (weight lattice)";

PrintedFixture make(std::string id, FixtureKind kind, RootSystemSpec sys, std::string printed,
                  std::string citation, std::string checked = {}, std::string note = {}) {
    PrintedFixture f;
    f.id = std::move(id);
    f.kind = kind;
    f.system = sys;
    f.printed = std::move(printed);
    const auto &vars = kind == FixtureKind::Tutte ? kXY : kind == FixtureKind::Characteristic ? kQ : kT;
    f.poly = parse_polynomial(checked.empty() ? f.printed : checked, vars);
    f.citation = std::move(citation);
    f.note = std::move(note);
    return f;
}

std::vector<PrintedFixture> build() {
    using K = FixtureKind;
    const auto W = LatticeKind::Weight;
    std::vector<PrintedFixture> v;

    auto tutte = [&](Family fam, unsigned n, const char *printed, std::string checked = {},
                     std::string note = {}) {
        const std::string row = std::string(1, family_char(fam)) + std::to_string(n);
        PrintedFixture f = make("weight-tutte:" + row, K::Tutte, {fam, n, W}, printed,
                              std::string(kTutteTable) + ", row " + row, checked, note);
        f.partial = !f.note.empty();
        v.push_back(std::move(f));
    };
    tutte(Family::A, 2, "1+x");
    tutte(Family::A, 3, "4+x+x^2+3 y");
    tutte(Family::A, 4, "15+5 x+3 x^2+x^3+20 y+4 x y+12 y^2+4 y^3");
    tutte(Family::A, 5,
          "96+6 x+11 x^2+6 x^3+x^4+150 y+20 x y+10 x^2 y+135 y^2+15 x y^2"
          "+95 y^3+5 x y^3+50 y^4+20 y^5+5 y^6 ");
    tutte(Family::B, 2, "3+4 x+x^2+4 y+2 y^2");
    tutte(Family::B, 3, "24+17 x+6 x^2+x^3+38 y+10 x y+33 y^2+3 x y^2+22 y^3+12 y^4+6 y^5+2 y^6");
    tutte(Family::B, 4,
          "153+156 x+62 x^2+12 x^3+x^4+348 y+200 x y+28 x^2 y+438 y^2+132 x y^2"
          "+6 x^2 y^2+420 y^3+60 x y^3+344 y^4+24 x y^4+260 y^5+12 x y^5+184 y^6"
          "+4 x y^6+120 y^7+72 y^8+40 y^9+20 y^10+8 y^11+2 y^12");
    {
        const std::string b5 =
            "1680+1409 x+580 x^2+150 x^3+20 x^4+x^5+4604 y+2436 x y+580 x^2 y"
            "+60 x^3 y+6910 y^2+2350 x y^2+330 x^2 y^2+10 x^3 y^2+7830y^3+1780 x y^3"
            "+150 x^2 y^3+7620 y^4+1200 x y^4+60 x^2 y^4+6846 y^5+804 x y^5+30 x^2 y^5"
            "+5844 y^6+506 x y^6+10 x^2 y^6+4780 y^7+300 x y^7+3780 y^8+180x y^8"
            "+2900 y^9+100 x y^9+2154 y^{10}+50 x y^{10}+1540 y^{11}+20 x y^{11}+1055y^{12}"
            "+5 x y^{12}+690 y^{13}+430 y^{14}+254 y^{15}+140 y^{16}+70 y^{17}";
        tutte(Family::B, 5, (b5 + "+30").c_str(), b5,
              "row is cut off after '+30'; only the terms through 70 y^{17} are checked");
    }
    tutte(Family::C, 2, "3+4 x+x^2+4 y+2 y^2");
    tutte(Family::C, 3, "15+23 x+9 x^2+x^3+32 y+16 x y+30 y^2+6 x y^2+20 y^3+12 y^4+6 y^5+2 y^6");
    tutte(Family::C, 4,
          "105+176 x+86 x^2+16 x^3+x^4+296 y+240 x y+40 x^2 y+396 y^2+168 x y^2"
          "+12 x^2 y^2+376 y^3+88 x y^3+304 y^4+48 x y^4+232 y^5+24 x y^5+168 y^6+8 x y^6"
          "+112 y^7+70 y^8+40 y^9+20 y^{10}+8 y^{11}+2 y^{12}");
    tutte(Family::C, 5,
          "945+1689 x+950 x^2+230 x^3+25 x^4+x^5+3264 y+3376 x y+960 x^2 y+80 x^3 y"
          "+5540 y^2+3500 x y^2+540 x^2 y^2+20 x^3 y^2+6640 y^3+2720 x y^3+240 x^2 y^3"
          "+6600 y^4+1920 x y^4+120 x^2 y^4+5956 y^5+1344 x y^5+60 x^2 y^5+5084 y^6"
          "+896 x y^6+20 x^2 y^6+4160 y^7+560 x y^7+3310 y^8+350 x y^8+2580 y^9+200 x y^9"
          "+1952 y^{10}+100 x y^{10}+1420 y^{11}+40 x y^{11}+990 y^{12}+10 x y^{12}+660 y^{13}+420 y^{14}"
          "+252 y^15+140 y^16+70 y^17+30 y^18+10 y^19+2 y^20");
    tutte(Family::D, 2, "1+2x+x^2");
    tutte(Family::D, 3, "15+5 x+3 x^2+x^3+20 y+4 x y+12 y^2+4 y^3");
    tutte(Family::D, 4,
          "57+88 x+38 x^2+8 x^3+x^4+160 y+112 x y+16 x^2 y+216 y^2+72 x y^2+200 y^3"
          "+24 x y^3+140 y^4+80 y^5+40 y^6+16 y^7+4 y^8");
    tutte(Family::D, 5,
          "915+629 x+270 x^2+90 x^3+15 x^4+x^5+2384 y+1096 x y+320 x^2 y+40 x^3 y"
          "+3540 y^2+1080 x y^2+180 x^2 y^2+4060 y^3+840 x y^3+60 x^2 y^3+3930 y^4"
          "+510 x y^4+3376 y^5+264 x y^5+2644 y^6+116 x y^6+1920 y^7+40 x y^7+1310 y^8"
          "+10 x y^8+840 y^9+504 y^{10}+280 y^{11}+140 y^{12}+60 y^{13}+20 y^{14}+4 y^{15}");

    auto chi_ehr = [&](Family fam, unsigned n, const char *chi, const char *ehr) {
        const std::string row = std::string(1, family_char(fam)) + std::to_string(n);
        const std::string cite = std::string(kCharTable) + ", row " + row;
        v.push_back(make("weight-char:" + row, K::Characteristic, {fam, n, W}, chi, cite));
        v.push_back(make("weight-ehrhart:" + row, K::Ehrhart, {fam, n, W}, ehr, cite));
    };
    chi_ehr(Family::A, 2, "-2+q", "1+2t");
    chi_ehr(Family::A, 3, "6 - 3 q + q^2", "1+3 t+9 t^2");
    chi_ehr(Family::A, 4, "-24 + 14 q - 6 q^2 + q^3", "1+6 t+18 t^2+64 t^3");
    chi_ehr(Family::A, 5, "120 - 50 q + 35 q^2 - 10 q^3 + q^4", "1+10 t+45 t^2+110 t^3+625 t^4");
    chi_ehr(Family::B, 2, "8-6 q+q^2", "1+6 t+14 t^2");
    chi_ehr(Family::B, 3, "-48+32 q-9 q^2+q^3", "1+9 t+45 t^2+174 t^3");
    chi_ehr(Family::B, 4, "384-320 q+104 q^2-16 q^3+q^4", "1+16 t+138 t^2+820 t^3+3106 t^4");
    chi_ehr(Family::B, 5, "-3840+3104 q-1160 q^2+240 q^3-25 q^4+q^5",
            "1+25 t+310 t^2+2530 t^3+15365 t^4+72290 t^5");
    chi_ehr(Family::C, 2, "8-6 q+q^2", "1+6 t+14 t^2");
    chi_ehr(Family::C, 3, "-48+44 q-12 q^2+q^3", "1+12 t+66 t^2+172 t^3");
    chi_ehr(Family::C, 4, "384-400 q+140 q^2-20 q^3+q^4", "1+20 t+192 t^2+1080 t^3+3036 t^4");
    chi_ehr(Family::C, 5, "-3840+4384 q-1800 q^2+340 q^3-30 q^4+q^5",
            "1+30 t+440 t^2+4040 t^3+23580 t^4+69976 t^5");
    chi_ehr(Family::D, 2, "4-4 q+q^2", "1+4 t+4 t^2");
    chi_ehr(Family::D, 3, "-24+14 q-6 q^2+q^3", "1+6 t+18 t^2+64 t^3");
    chi_ehr(Family::D, 4, "192-192 q+68 q^2-12 q^3+q^4", "1+12 t+84 t^2+432 t^3+1272 t^4");
    chi_ehr(Family::D, 5, "-1920+1504 q-640 q^2+160 q^3-20 q^4+q^5",
            "1+20 t+200 t^2+1320 t^3+6700 t^4+31488 t^5");

    const char *const example = "worked example for C2 = {2e1, e1+e2, 2e2, e1-e2}";
    v.push_back(make("c2-example:tutte-integer", K::Tutte, {Family::C, 2, LatticeKind::Integer},
                     "x ^2+ 2y^2 + 4x + 4y + 3", std::string(example) + ", integer lattice"));
    v.push_back(make("c2-example:tutte-root", K::Tutte, {Family::C, 2, LatticeKind::Root},
                     "x ^2+ y^2 + 2x + 2y + 1", std::string(example) + ", root lattice"));
    v.push_back(make("c2-example:ehrhart-integer", K::Ehrhart, {Family::C, 2, LatticeKind::Integer},
                     "14t^2+6t^2+1", std::string(example) + ", integer lattice", "14t^2+6t+1",
                     "printed '6t^2' is read as 6t, as the accompanying counts 14+6+1=21 and "
                     "14-6+1=9 require"));
    v.push_back(make("c2-example:ehrhart-root", K::Ehrhart, {Family::C, 2, LatticeKind::Root},
                     "7t^2+4t+1", std::string(example) + ", root lattice"));
    return v;
}

} // namespace

MultiPoly parse_polynomial(std::string_view text, const std::vector<std::string> &vars) {
    return PolyParser(text, vars).parse();
}

std::string fixture_kind_name(FixtureKind k) {
    switch (k) {
    case FixtureKind::Tutte:
        return "tutte";
    case FixtureKind::Characteristic:
        return "characteristic";
    case FixtureKind::Ehrhart:
        return "ehrhart";
    }
    return "?";
}

const std::vector<PrintedFixture> &printed_fixtures() {
    static const std::vector<PrintedFixture> all = build();
    return all;
}

const PrintedFixture &printed_fixture(std::string_view id) {
    for (const auto &f : printed_fixtures()) {
        if (f.id == id) {
            return f;
        }
    }
    throw PreconditionError("unknown fixture '" + std::string(id) + "'");
}

bool fixture_matches(const PrintedFixture &f, const MultiPoly &computed) {
    const MultiPoly c = computed.with_vars(f.poly.vars());
    if (!f.partial) {
        return c == f.poly;
    }
    for (const auto &[exps, coeff] : f.poly.terms()) {
        if (c.coeff(exps) != coeff) {
            return false;
        }
    }
    return true;
}

} // namespace tuttekit

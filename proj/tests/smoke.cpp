#include <chrono>
#include <iostream>
#include "reflectk/expr.hpp"
#include "reflectk/families.hpp"
#include "reflectk/verifier.hpp"
using namespace reflectk;
int main() {
    auto t0 = std::chrono::steady_clock::now();
    auto ms = [&] {
        auto t1 = std::chrono::steady_clock::now();
        auto d = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        t0 = t1;
        return d;
    };
    RBundle b2 = build_R(2);
    std::cout << "build N=2: " << ms() << "ms\n";
    std::cout << "R_q(2,3) = " << to_string(b2.R_q.at(2, 3)) << "\n";
    std::cout << "R(u)(1,1) = " << to_string(b2.R_of_u.at(1, 1)) << "\n";
    auto y2 = check_YBE(b2);
    std::cout << "YBE N=2 " << (y2.pass ? "pass" : "FAIL") << " in " << ms() << "ms\n";
    RBundle b3 = build_R(3);
    auto y3 = check_YBE(b3);
    std::cout << "YBE N=3 " << (y3.pass ? "pass" : "FAIL") << " in " << ms() << "ms\n";
    Mat ks = build_KS(SymClass{3, 0, 1});
    auto re3 = check_RE(b3, ks);
    std::cout << "RE KS(3;0,1) " << (re3.pass ? "pass" : "FAIL") << " in " << ms() << "ms\n";
    RBundle b4 = build_R(4);
    std::cout << "build N=4: " << ms() << "ms\n";
    Mat ks4 = build_KS(SymClass{4, 2, 3});
    std::cout << "KS(4;2,3)[1][1] = " << to_string(ks4.at(1, 1)) << "\n";
    auto re4 = check_RE(b4, ks4);
    std::cout << "RE KS(4;2,3) " << (re4.pass ? "pass" : "FAIL") << " in " << ms() << "ms\n";
    Mat qons = build_twisted(TwistedClass{4, TwistedKind::QOnsager});
    auto ct4 = check_CtRE(b4, qons);
    std::cout << "CtRE qOns N=4 " << (ct4.pass ? "pass" : "FAIL") << " in " << ms() << "ms\n";
    auto y4 = check_YBE(b4);
    std::cout << "YBE N=4 " << (y4.pass ? "pass" : "FAIL") << " in " << ms() << "ms\n";
    RBundle b5 = build_R(5);
    Mat ks5 = build_KS(SymClass{5, 1, 3});
    auto re5 = check_RE(b5, ks5);
    std::cout << "RE KS(5;1,3) " << (re5.pass ? "pass" : "FAIL") << " in " << ms() << "ms\n";
    VerifyOptions sampled{VerifyMode::Sampled, 3, 12};
    auto re4s = check_RE(b4, ks4, sampled);
    std::cout << "RE KS(4;2,3) sampled " << (re4s.pass ? "pass" : "FAIL") << " retries="
              << re4s.retries << " in " << ms() << "ms\n";
    return 0;
}

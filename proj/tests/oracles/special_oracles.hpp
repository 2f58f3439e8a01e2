// Generated by gen_special_oracles.py (mpmath, high precision). Do not edit.
#pragma once

#include <array>

namespace fracburst::test_oracles {

struct LnGammaPoint { double x; double ln_gamma; };

inline constexpr std::array<LnGammaPoint, 68> kLnGamma{{
    {9.999999999999999547481e-7, 1.381550998074943171446e+1},
    {1.778279410038922900869e-6, 1.323986325826763144762e+1},
    {3.16227766016837919113e-6, 1.266421618615927374695e+1},
    {5.623413251903491208298e-6, 1.208856849232252917563e+1},
    {1.000000000000000081803e-5, 1.151291969289582562562e+1},
    {1.778279410038922900869e-5, 1.093726892747448113924e+1},
    {3.162277660168379529943e-5, 1.036161466613363770484e+1},
    {5.623413251903490700078e-5, 9.785954188603299915529},
    {1.000000000000000047922e-4, 9.210282658633962210524},
    {1.778279410038922697581e-4, 8.634591479660905050974},
    {3.162277660168379394418e-4, 8.058865376092973394116},
    {5.623413251903490971129e-4, 7.48307722002441363414},
    {1.000000000000000020817e-3, 6.907178885383853661684},
    {1.778279410038922751791e-3, 6.331085153620186577783},
    {3.162277660168379394418e-3, 5.754645628309431441917},
    {5.623413251903490971129e-3, 5.177596474724967992357},
    {1.000000000000000020817e-2, 4.599479878042021701581},
    {1.778279410038922925263e-2, 4.019517265805386085754},
    {3.162277660168379134209e-2, 3.436434537897840929826},
    {5.623413251903491144601e-2, 2.848304354379372090496},
    {1.000000000000000055511e-1, 2.252712651734205902006},
    {1.778279410038922925263e-1, 1.648287579011278729174},
    {3.162277660168379411765e-1, 1.040520647486643142945},
    {5.0e-1, 5.723649429247000870717e-1},
    {5.623413251903490728267e-1, 4.589227884724191492451e-1},
    {7.5e-1, 2.032809514312953714814e-1},
    {9.000000000000000222045e-1, 6.637623973474295442597e-2},
    {9.899999999999999911182e-1, 5.854806764709781453188e-3},
    {1.0, 0.0},
    {1.010000000000000008882, -5.690307946069650503701e-3},
    {1.100000000000000088818, -4.987244125983976178529e-2},
    {1.25, -9.827183642181316146385e-2},
    {1.461632144968362245763, -1.214862905358496080955e-1},
    {1.5, -1.207822376352452223455e-1},
    {1.77827941003892275873, -7.709930719365306334508e-2},
    {1.899999999999999911182, -3.898427592308336167429e-2},
    {1.989999999999999991118, -4.19552908879166870186e-3},
    {2.009999999999999786837, 4.260022907098345833806e-3},
    {2.100000000000000088818, 4.543773854448517900216e-2},
    {2.5, 2.846828704729191596325e-1},
    {3.162277660168379522787, 8.479881161762292673277e-1},
    {3.700000000000000177636, 1.4280723266653881292},
    {5.623413251903491172357, 4.158150028029237981657},
    {1.0e+1, 1.280182748008146961121e+1},
    {1.15e+1, 1.629200047656724132024e+1},
    {1.490000000000000035527e+1, 2.492413200221727830019e+1},
    {1.509999999999999964473e+1, 2.5458999750992663083e+1},
    {1.778279410038922847548e+1, 3.288471019305620505297e+1},
    {3.162277660168379256334e+1, 7.679305925851986252757e+1},
    {5.623413251903490817085e+1, 1.692683076393067535154e+2},
    {1.0e+2, 3.59134205369575398776e+2},
    {1.705e+2, 7.040044277342046707918e+2},
    {1.778279410038922776494e+2, 7.41794981582091803069e+2},
    {3.162277660168379611605e+2, 1.502166554726125079771e+3},
    {5.62341325190349039076e+2, 2.996218276563914494551e+3},
    {1.0e+3, 5.905220423209181211826e+3},
    {1.778279410038922833337e+3, 1.15264767719650200945e+4},
    {3.162277660168379497918e+3, 2.231955868154570406278e+4},
    {5.623413251903491072881e+3, 4.292964157531740324993e+4},
    {1.0e+4, 8.209971749644237727265e+4},
    {1.778279410038922651438e+4, 1.562354174306969919253e+5},
    {3.16227766016837922507e+4, 2.960365645325564364276e+5},
    {5.623413251903490890982e+4, 5.588097252463463852728e+5},
    {1.0e+5, 1.051287708973656894901e+6},
    {1.778279410038922796957e+5, 1.971852755534522048835e+6},
    {3.162277660168379079551e+5, 3.68854419092944324696e+6},
    {5.623413251903491327539e+5, 6.882975801023625876324e+6},
    {1.0e+6, 1.281550456914761165998e+7},
}};

struct MittagLefflerPoint { double alpha; double beta; double t; double value; };

inline constexpr std::array<MittagLefflerPoint, 18> kMittagLeffler{{
    {0.5, 1.0, -1.0, 4.275835761558070044108e-1},
    {0.5, 1.0, 1.0, 5.00898008076228346631},
    {0.5, 0.5, -1.0, 1.366060073919492825373e-1},
    {0.9, 1.0, -3.0, 8.388835403377326206749e-2},
    {0.1, 1.0, -2.0, 3.200153359597273986076e-1},
    {0.1, 1.0, -20.0, 4.473386400745095983008e-2},
    {0.4, 1.0, -20.0, 3.301089796175726002213e-2},
    {0.6, 1.0, -20.0, 2.294656427325837639629e-2},
    {0.9, 1.0, -20.0, 5.74950781610911258364e-3},
    {0.3, 0.5, -5.0, 4.55193694118529573859e-2},
    {0.3, 1.3, -5.0, 1.725838261959458769709e-1},
    {0.3, 2.3, -5.0, 1.635544335056099566988e-1},
    {0.9, 2.0, -5.0, 1.984580368407139607407e-1},
    {0.6, 0.6, -3.0, 3.169392656155702653406e-2},
    {0.9, 0.9, -10.0, 1.434652362294128595039e-3},
    {0.3, 1.0, 5.0, 2.249150277554807402509e+93},
    {0.8, 1.8, 2.5, 1.116967120837395618269e+1},
    {0.25, 0.75, -0.5, 4.972136794980663028023e-1},
}};

}  // namespace fracburst::test_oracles

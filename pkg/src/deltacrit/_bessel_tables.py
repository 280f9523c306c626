"""Frozen Chebyshev tables for the cylinder-function evaluators.

Generated by scripts/gen_bessel_tables.py; do not edit by hand.
"""

XSPLIT_JY = 6.0
XSPLIT_K = 2.0

P0 = (
    1.9981055284040121,
    -0.0009379234961606365,
    9.054292041789174e-06,
    -2.4514309605973397e-07,
    1.1921803492727414e-08,
    -8.533947575667481e-10,
    8.058114038285425e-11,
    -9.381876548646768e-12,
    1.2879980104332943e-12,
    -2.0209584773550002e-13,
    3.5428526151031927e-14,
    -6.82156515807918e-15,
    1.423700385065373e-15,
    -3.1873353933227535e-16,
    7.590390663236301e-17,
    -1.9095988833645738e-17,
    5.04642024721823e-18,
    -1.3941356834545708e-18,
    4.0099371092730446e-19,
    -1.1966392861069035e-19,
    3.6937643840553877e-20,
    -1.1762802908356768e-20,
    3.855524693369005e-21,
    -1.2980749706739214e-21,
    4.480962794250704e-22,
)

Q0 = (
    -0.24807911317163348,
    0.0009427841660840524,
    -1.6962684507821096e-05,
    6.525150821795064e-07,
    -4.0195463549152936e-08,
    3.4253702103928413e-09,
    -3.7066364010506757e-10,
    4.821857982716751e-11,
    -7.2651407752481234e-12,
    1.2346773301411404e-12,
    -2.320774566693983e-13,
    4.7533857810146373e-14,
    -1.048592415151385e-14,
    2.468390906124814e-15,
    -6.153976656806625e-16,
    1.6148794048587032e-16,
    -4.437308314970459e-17,
    1.2711504804534792e-17,
    -3.782278413376392e-18,
    1.1651869806664723e-18,
    -3.7060712045128407e-19,
    1.214088245213925e-19,
    -4.0876543450155884e-20,
    1.4117607958892757e-20,
    -4.993178513740451e-21,
    1.8057816079708567e-21,
    -6.668604691108604e-22,
    2.511615533838652e-22,
    -9.636881154319552e-23,
    3.763096404115363e-23,
)

P1 = (
    2.0031792047349133,
    0.0015774893638765802,
    -1.1803406124342493e-05,
    2.947529654578424e-07,
    -1.377937786180215e-08,
    9.635480449730673e-10,
    -8.957956697568862e-11,
    1.0314213713205007e-11,
    -1.404160262703365e-12,
    2.1887536406075948e-13,
    -3.8165948678129895e-14,
    7.316216178936927e-15,
    -1.5212404424244346e-15,
    3.3947910248473935e-16,
    -8.061879836651016e-17,
    2.0232370054073204e-17,
    -5.335061383271963e-18,
    1.4709948096870284e-18,
    -4.223540214589606e-19,
    1.2583622430772407e-19,
    -3.878602695629514e-20,
    1.233481905713016e-20,
    -4.03800430173687e-21,
    1.3579516007805706e-21,
    -4.682656695230818e-22,
)

Q1 = (
    0.7472916250522398,
    -0.0013323565678077876,
    2.1015299855668007e-05,
    -7.655277140541408e-07,
    4.577833841001492e-08,
    -3.8289073217382214e-09,
    4.0902066781190094e-10,
    -5.270603363481061e-11,
    7.883486556435826e-12,
    -1.331985174953016e-12,
    2.4917696139807316e-13,
    -5.083285931983429e-14,
    1.1175615726250782e-14,
    -2.623023397239173e-15,
    6.522693908706641e-16,
    -1.707746713925995e-16,
    4.682972661064636e-17,
    -1.339079807397861e-17,
    3.977823049373591e-18,
    -1.223584682529269e-18,
    3.8864553616267444e-19,
    -1.2715677371027522e-19,
    4.276165776178733e-20,
    -1.4752628518421344e-20,
    5.212497872591947e-21,
    -1.8833175429725987e-21,
    6.948783844604961e-22,
    -2.6149647924108296e-22,
    1.0025571414303888e-22,
)

K0 = (
    2.4403030820659555,
    -0.0314481013119645,
    0.0015698838857300533,
    -0.00012849549581627802,
    1.39498137188765e-05,
    -1.8317555227191195e-06,
    2.766813639445015e-07,
    -4.660489897687948e-08,
    8.574034017414225e-09,
    -1.6975345093890614e-09,
    3.5773972814003283e-10,
    -7.957489244477396e-11,
    1.8559491149549264e-11,
    -4.514597883374519e-12,
    1.1403405882073441e-12,
    -2.9800969231481784e-13,
    8.032890775068375e-14,
    -2.2275133267462965e-14,
    6.340076476276646e-15,
    -1.848593377920907e-15,
    5.5120559994043335e-16,
    -1.6782311257549006e-16,
    5.2103917776435543e-17,
    -1.6475805939842632e-17,
    5.3004337711773354e-18,
    -1.7331712005821001e-18,
    5.755109202882729e-19,
    -1.9390956053183555e-19,
    6.624610534536147e-20,
    -2.2932197170560118e-20,
    8.038732341097788e-21,
    -2.8519341150787214e-21,
    1.023466465662613e-21,
    -3.713461594111394e-22,
)

K1 = (
    2.7206261904844427,
    0.10392373657681724,
    -0.002857816859622779,
    0.00019521551847135162,
    -1.936197974166083e-05,
    2.406484947837217e-06,
    -3.5019606030878126e-07,
    5.7410841254500495e-08,
    -1.0345762465678097e-08,
    2.0150497551970347e-09,
    -4.1903547593419254e-10,
    9.218315187605315e-11,
    -2.129967838427791e-11,
    5.139639673482343e-12,
    -1.2891739609498229e-12,
    3.348419666052243e-13,
    -8.976705182010146e-14,
    2.4771544242195988e-14,
    -7.0198370892147685e-15,
    2.038703166239861e-15,
    -6.057047270643018e-16,
    1.8380935752430455e-16,
    -5.689462849193648e-17,
    1.7940510478863572e-17,
    -5.7567444820733025e-18,
    1.8778651901623268e-18,
    -6.22164528735261e-19,
    2.0919125269831136e-19,
    -7.132712908341102e-20,
    2.464575141735473e-20,
    -8.6244820631302e-21,
    3.0547579355161693e-21,
    -1.094565725434946e-21,
    3.965644894933704e-22,
)

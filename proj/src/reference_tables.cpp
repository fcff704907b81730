#include "berncert/reference_tables.hpp"

namespace berncert::reference {

// Frozen expected values for the degree-(6,4,3) certification targets.
// Regenerating any of these from the library must reproduce them exactly.

const char* const kRtildeWhole[4][7][5] = {
    {
        {"16", "16", "41/3", "45/4", "9"},
        {"16", "17", "142/9", "163/12", "9"},
        {"208/15", "97/6", "503/30", "467/30", "143/15"},
        {"10", "137/10", "33/2", "84/5", "53/5"},
        {"88/15", "637/60", "1363/90", "333/20", "169/15"},
        {"8/3", "85/12", "23/2", "53/4", "29/3"},
        {"1", "1", "1", "1", "1"},
    },
    {
        {"16", "16", "41/3", "21/2", "6"},
        {"16", "607/36", "31/2", "113/9", "6"},
        {"208/15", "2851/180", "2899/180", "853/60", "611/90"},
        {"99/10", "1567/120", "919/60", "181/12", "251/30"},
        {"82/15", "1711/180", "1201/90", "523/36", "143/15"},
        {"2", "23/4", "19/2", "395/36", "71/9"},
        {"1/2", "1/2", "1/2", "1/2", "1/2"},
    },
    {
        {"16", "16", "41/3", "39/4", "3"},
        {"16", "301/18", "137/9", "415/36", "3"},
        {"208/15", "698/45", "8363/540", "2339/180", "43/10"},
        {"199/20", "377/30", "5179/360", "553/40", "69/10"},
        {"17/3", "6497/720", "13291/1080", "3217/240", "329/36"},
        {"7/3", "89/16", "211/24", "1459/144", "277/36"},
        {"3/4", "3/4", "3/4", "3/4", "3/4"},
    },
    {
        {"16", "16", "41/3", "9", "0"},
        {"16", "199/12", "269/18", "21/2", "0"},
        {"208/15", "911/60", "671/45", "119/10", "31/15"},
        {"203/20", "489/40", "329/24", "521/40", "31/5"},
        {"97/15", "2201/240", "4331/360", "3187/240", "121/12"},
        {"11/3", "313/48", "75/8", "515/48", "109/12"},
        {"23/8", "23/8", "23/8", "23/8", "23/8"},
    },
};

const char* const kR2tildeWhole[4][7][5] = {
    {
        {"0", "9/2", "9", "45/4", "9"},
        {"0", "11/2", "100/9", "163/12", "9"},
        {"6/5", "71/10", "1181/90", "467/30", "143/15"},
        {"4", "19/2", "149/10", "84/5", "53/5"},
        {"38/5", "241/20", "159/10", "333/20", "169/15"},
        {"26/3", "139/12", "27/2", "53/4", "29/3"},
        {"1", "1", "1", "1", "1"},
    },
    {
        {"0", "9/2", "9", "21/2", "6"},
        {"0", "193/36", "65/6", "113/9", "6"},
        {"1", "298/45", "2231/180", "853/60", "611/90"},
        {"33/10", "1009/120", "811/60", "181/12", "251/30"},
        {"31/5", "917/90", "413/30", "523/36", "143/15"},
        {"7", "19/2", "67/6", "395/36", "71/9"},
        {"1/2", "1/2", "1/2", "1/2", "1/2"},
    },
    {
        {"0", "9/2", "9", "39/4", "3"},
        {"0", "47/9", "95/9", "415/36", "3"},
        {"4/5", "553/90", "6323/540", "2339/180", "43/10"},
        {"11/4", "112/15", "4459/360", "553/40", "69/10"},
        {"27/5", "6449/720", "13387/1080", "3217/240", "329/36"},
        {"19/3", "137/16", "81/8", "1459/144", "277/36"},
        {"3/4", "3/4", "3/4", "3/4", "3/4"},
    },
    {
        {"0", "9/2", "9", "9", "0"},
        {"0", "61/12", "185/18", "21/2", "0"},
        {"3/5", "17/3", "166/15", "119/10", "31/15"},
        {"47/20", "267/40", "1381/120", "521/40", "31/5"},
        {"26/5", "401/48", "4243/360", "3187/240", "121/12"},
        {"20/3", "421/48", "83/8", "515/48", "109/12"},
        {"23/8", "23/8", "23/8", "23/8", "23/8"},
    },
};

const char* const kRtildeSubdivisionMax[8][8] = {
    {"1025/64", "83341001/5242880", "196377359/12582912", "8143212893/536870912", "7584635/524288", "7255503077/536870912", "413235335/33554432", "5829969821/536870912"},
    {"8446662725/536870912", "8450945213/536870912", "523473491/33554432", "2566321889/167772160", "122237/8192", "119402813/8388608", "6885503/524288", "96980213/8388608"},
    {"124671773/8388608", "7976843/524288", "2003057/131072", "127833653/8388608", "1471477/98304", "7790759037/536870912", "457491407/33554432", "6504238197/536870912"},
    {"7159139037/536870912", "476238267/33554432", "7899738677/536870912", "498815877/33554432", "7782363/524288", "1948147173/134217728", "7198027/524288", "19383031/1572864"},
    {"1483973/131072", "103451/8192", "1783613/131072", "907/64", "234141/16384", "1863845/131072", "111743/8192", "1613501/131072"},
    {"4823711405/536870912", "355012907/33554432", "6377006213/536870912", "6695843/524288", "7056906317/536870912", "7066669577/536870912", "431990015/33554432", "6350745797/536870912"},
    {"55817973/8388608", "4217859/524288", "78811037/8388608", "85185/8192", "91831653/8388608", "34734761/3145728", "5729495/524288", "85768029/8388608"},
    {"2498276837/536870912", "180167627/33554432", "3222265757/536870912", "3494483/524288", "3828389717/536870912", "973980383/134217728", "242567447/33554432", "3696095117/536870912"},
};

const char* const kR2tildeQuadrant[4][4][7][5] = {
  {
    {
        {"0", "9/4", "9/2", "207/32", "63/8"},
        {"0", "5/2", "361/72", "691/96", "139/16"},
        {"3/10", "119/40", "8167/1440", "15361/1920", "143/15"},
        {"19/20", "297/80", "1039/160", "5683/640", "3329/320"},
        {"77/40", "2999/640", "4291/576", "75247/7680", "4321/384"},
        {"37/12", "737/128", "9685/1152", "16325/1536", "9185/768"},
        {"265/64", "3401/512", "4653/512", "22745/2048", "1571/128"},
    },
    {
        {"0", "9/4", "9/2", "51/8", "15/2"},
        {"0", "355/144", "89/18", "4037/576", "197/24"},
        {"1/4", "257/90", "351/64", "22099/2880", "3211/360"},
        {"63/80", "6619/1920", "11773/1920", "4283/512", "18469/1920"},
        {"127/80", "1349/320", "823/120", "69503/7680", "19709/1920"},
        {"81/32", "5815/1152", "17413/2304", "22175/2304", "24775/2304"},
        {"433/128", "731/128", "8199/1024", "20231/2048", "5571/512"},
    },
    {
        {"0", "9/4", "9/2", "201/32", "57/8"},
        {"0", "175/72", "39/8", "491/72", "371/48"},
        {"1/5", "197/72", "45791/8640", "42359/5760", "11983/1440"},
        {"103/160", "3073/960", "66767/11520", "15151/1920", "17083/1920"},
        {"53/40", "29347/7680", "219659/34560", "9695/1152", "13577/1440"},
        {"413/192", "20801/4608", "31817/4608", "40793/4608", "11323/1152"},
        {"747/256", "10409/2048", "3715/512", "9241/1024", "635/64"},
    },
    {
        {"0", "9/4", "9/2", "99/16", "27/4"},
        {"0", "115/48", "173/36", "1273/192", "29/4"},
        {"3/20", "157/60", "737/144", "6761/960", "743/96"},
        {"83/160", "1903/640", "4213/768", "19091/2560", "659/80"},
        {"91/80", "8967/2560", "13691/2304", "30319/3840", "8393/960"},
        {"373/192", "6385/1536", "29713/4608", "133/16", "147/16"},
        {"1415/512", "9779/2048", "7017/1024", "8767/1024", "1205/128"},
    },
  },
  {
    {
        {"63/8", "297/32", "81/8", "81/8", "9"},
        {"139/16", "977/96", "395/36", "257/24", "9"},
        {"143/15", "21247/1920", "4249/360", "5431/480", "137/15"},
        {"3329/320", "7633/640", "1007/80", "1907/160", "47/5"},
        {"4321/384", "32531/2560", "76429/5760", "3987/320", "1169/120"},
        {"9185/768", "6805/512", "3955/288", "1231/96", "241/24"},
        {"1571/128", "27527/2048", "1761/128", "3277/256", "323/32"},
    },
    {
        {"15/2", "69/8", "9", "33/4", "6"},
        {"197/24", "5419/576", "1403/144", "631/72", "6"},
        {"3211/360", "3253/320", "30151/2880", "4477/480", "2231/360"},
        {"18469/1920", "83507/7680", "5351/480", "4759/480", "791/120"},
        {"19709/1920", "88169/7680", "22501/1920", "20077/1920", "853/120"},
        {"24775/2304", "9125/768", "9271/768", "693/64", "547/72"},
        {"5571/512", "24337/2048", "12305/1024", "1387/128", "251/32"},
    },
    {
        {"57/8", "255/32", "63/8", "51/8", "3"},
        {"371/48", "311/36", "613/72", "491/72", "3"},
        {"11983/1440", "1189/128", "79229/8640", "591/80", "133/40"},
        {"17083/1920", "3803/384", "22627/2304", "15473/1920", "159/40"},
        {"13577/1440", "20047/1920", "359651/34560", "67217/7680", "13957/2880"},
        {"11323/1152", "16597/1536", "49813/4608", "4769/512", "3301/576"},
        {"635/64", "11079/1024", "5553/512", "19527/2048", "815/128"},
    },
    {
        {"27/4", "117/16", "27/4", "9/2", "0"},
        {"29/4", "1511/192", "1049/144", "39/8", "0"},
        {"743/96", "8099/960", "1423/180", "1319/240", "31/60"},
        {"659/80", "4617/512", "33047/3840", "813/128", "31/20"},
        {"8393/960", "2455/256", "107491/11520", "3761/512", "2837/960"},
        {"147/16", "161/16", "45841/4608", "12721/1536", "853/192"},
        {"1205/128", "10513/1024", "10509/1024", "18257/2048", "2909/512"},
    },
  },
  {
    {
        {"265/64", "3401/512", "4653/512", "22745/2048", "1571/128"},
        {"499/96", "1927/256", "22507/2304", "35585/3072", "9667/768"},
        {"1477/240", "329/40", "11719/1152", "14987/1280", "1601/128"},
        {"269/40", "169/20", "3207/320", "3589/320", "3771/320"},
        {"389/60", "1243/160", "1067/120", "9313/960", "803/80"},
        {"29/6", "89/16", "37/6", "631/96", "161/24"},
        {"1", "1", "1", "1", "1"},
    },
    {
        {"433/128", "731/128", "8199/1024", "20231/2048", "5571/512"},
        {"271/64", "7343/1152", "38965/4608", "93379/9216", "6341/576"},
        {"799/160", "19781/2880", "99703/11520", "7247/720", "7759/720"},
        {"217/40", "891/128", "1609/192", "72703/7680", "3833/384"},
        {"207/40", "907/144", "10501/1440", "46177/5760", "11987/1440"},
        {"15/4", "35/8", "235/48", "3023/576", "773/144"},
        {"1/2", "1/2", "1/2", "1/2", "1/2"},
    },
    {
        {"747/256", "10409/2048", "3715/512", "9241/1024", "635/64"},
        {"1415/384", "52079/9216", "35053/4608", "5297/576", "11537/1152"},
        {"4217/960", "70213/11520", "268199/34560", "6991/768", "49/5"},
        {"387/80", "3979/640", "86741/11520", "5483/640", "17473/1920"},
        {"1129/240", "32867/5760", "57173/8640", "2807/384", "3671/480"},
        {"85/24", "787/192", "439/96", "2827/576", "727/144"},
        {"3/4", "3/4", "3/4", "3/4", "3/4"},
    },
    {
        {"1415/512", "9779/2048", "7017/1024", "8767/1024", "1205/128"},
        {"2753/768", "16567/3072", "1045/144", "4511/512", "617/64"},
        {"8489/1920", "22943/3840", "2903/384", "1067/120", "9263/960"},
        {"1633/320", "407/64", "5845/768", "4433/512", "297/32"},
        {"2569/480", "12043/1920", "4117/576", "7547/960", "3979/480"},
        {"229/48", "339/64", "553/96", "587/96", "101/16"},
        {"23/8", "23/8", "23/8", "23/8", "23/8"},
    },
  },
  {
    {
        {"1571/128", "27527/2048", "1761/128", "3277/256", "323/32"},
        {"9667/768", "13917/1024", "7939/576", "4907/384", "487/48"},
        {"1601/128", "17033/1280", "77009/5760", "2969/240", "199/20"},
        {"3771/320", "3953/320", "787/64", "1819/160", "93/10"},
        {"803/80", "9959/960", "819/80", "303/32", "79/10"},
        {"161/24", "219/32", "161/24", "299/48", "16/3"},
        {"1", "1", "1", "1", "1"},
    },
    {
        {"5571/512", "24337/2048", "12305/1024", "1387/128", "251/32"},
        {"6341/576", "36511/3072", "18373/1536", "347/32", "1165/144"},
        {"7759/720", "919/80", "14719/1280", "20137/1920", "1457/180"},
        {"3833/384", "80617/7680", "20047/1920", "9193/960", "917/120"},
        {"11987/1440", "16573/1920", "767/90", "3767/480", "2323/360"},
        {"773/144", "3161/576", "43/8", "715/144", "151/36"},
        {"1/2", "1/2", "1/2", "1/2", "1/2"},
    },
    {
        {"635/64", "11079/1024", "5553/512", "19527/2048", "815/128"},
        {"11537/1152", "65/6", "50141/4608", "9989/1024", "2017/288"},
        {"49/5", "40309/3840", "364571/34560", "36991/3840", "21287/2880"},
        {"17473/1920", "18497/1920", "111317/11520", "215/24", "1163/160"},
        {"3671/480", "5111/640", "13771/1728", "14327/1920", "455/72"},
        {"727/144", "2989/576", "493/96", "2783/576", "38/9"},
        {"3/4", "3/4", "3/4", "3/4", "3/4"},
    },
    {
        {"1205/128", "10513/1024", "10509/1024", "18257/2048", "2909/512"},
        {"617/64", "5361/512", "12185/1152", "29329/3072", "5315/768"},
        {"9263/960", "333/32", "6777/640", "7585/768", "5063/640"},
        {"297/32", "5071/512", "7759/768", "309/32", "2663/320"},
        {"3979/480", "8369/960", "25517/2880", "5499/640", "249/32"},
        {"101/16", "625/96", "629/96", "409/64", "287/48"},
        {"23/8", "23/8", "23/8", "23/8", "23/8"},
    },
  },
};

const char* const kR2tildeQuadrantMax[4] = {"1571/128", "1761/128", "9667/768", "7939/576"};

const ExpansionTerm kR2tildeExpansion[kR2tildeExpansionSize] = {
    {{0, 1, 0}, "18", "1"},
    {{0, 3, 0}, "-9", "1"},
    {{0, 3, 1}, "-9", "1"},
    {{1, 1, 0}, "24", "1"},
    {{1, 1, 1}, "-10", "1"},
    {{1, 2, 0}, "4", "1"},
    {{1, 3, 0}, "-24", "1"},
    {{1, 3, 1}, "10", "1"},
    {{1, 4, 0}, "-4", "1"},
    {{2, 0, 0}, "18", "1"},
    {{2, 0, 1}, "-9", "1"},
    {{2, 1, 0}, "-36", "1"},
    {{2, 2, 0}, "-9", "1"},
    {{2, 2, 1}, "15", "2"},
    {{2, 2, 2}, "23", "2"},
    {{2, 3, 0}, "33", "1"},
    {{2, 3, 1}, "13", "1"},
    {{2, 4, 0}, "2", "1"},
    {{3, 0, 0}, "8", "1"},
    {{3, 0, 1}, "-6", "1"},
    {{3, 0, 2}, "9", "1"},
    {{3, 1, 0}, "-16", "1"},
    {{3, 1, 1}, "6", "1"},
    {{3, 2, 0}, "-16", "1"},
    {{3, 2, 1}, "6", "1"},
    {{3, 2, 2}, "-9", "1"},
    {{3, 3, 0}, "16", "1"},
    {{3, 3, 1}, "-6", "1"},
    {{3, 4, 0}, "8", "1"},
    {{4, 0, 0}, "-18", "1"},
    {{4, 0, 1}, "9", "1"},
    {{4, 1, 0}, "21", "1"},
    {{4, 1, 1}, "-1", "1"},
    {{4, 1, 2}, "21", "4"},
    {{4, 2, 0}, "8", "1"},
    {{4, 2, 1}, "-12", "1"},
    {{4, 2, 2}, "-14", "1"},
    {{4, 3, 0}, "-21", "1"},
    {{4, 3, 1}, "-8", "1"},
    {{4, 4, 0}, "-4", "1"},
    {{5, 0, 0}, "-8", "1"},
    {{5, 0, 1}, "6", "1"},
    {{5, 0, 2}, "-9", "1"},
    {{5, 1, 0}, "-8", "1"},
    {{5, 1, 1}, "4", "1"},
    {{5, 2, 0}, "12", "1"},
    {{5, 2, 1}, "-6", "1"},
    {{5, 2, 2}, "9", "1"},
    {{5, 3, 0}, "8", "1"},
    {{5, 3, 1}, "-4", "1"},
    {{5, 4, 0}, "-4", "1"},
    {{6, 0, 0}, "1", "1"},
    {{6, 0, 1}, "-3", "2"},
    {{6, 0, 2}, "9", "4"},
    {{6, 0, 3}, "9", "8"},
    {{6, 1, 0}, "-3", "1"},
    {{6, 1, 1}, "1", "1"},
    {{6, 1, 2}, "-21", "4"},
    {{6, 2, 0}, "1", "1"},
    {{6, 2, 1}, "9", "2"},
    {{6, 2, 2}, "5", "2"},
    {{6, 3, 0}, "-3", "1"},
    {{6, 3, 1}, "4", "1"},
    {{6, 4, 0}, "2", "1"},
};

}  // namespace berncert::reference

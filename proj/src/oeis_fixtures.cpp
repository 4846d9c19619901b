// Generated by tools/gen_oeis_fixtures.py; do not edit.
#include "fishburn/oeis.hpp"

namespace fishburn::oeis {

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> table = {
      // sum prod (1-(1-z)^j)
      {"A022493", 0, {"1", "1", "2", "5", "15", "53", "217", "1014", "5335", "31240", "201608", "1422074", "10886503", "89903100", "796713190", "7541889195", "75955177642", "810925547354", "9148832109645", "108759758865725"}},
      // n! [z^n] sum prod (e^{jz}-1)
      {"A158690", 0, {"1", "1", "5", "55", "1073", "32671", "1431665", "85363615", "6646603073", "654896692351", "79656194515025", "11722538113191775", "2052949879753739873", "421931472111868912831", "100568330857984368195185", "27516685075153974997413535", "8566029732786907953236793473", "3010326673194306796681005946111", "1186011134006200873821171605248145", "520620157562631016505152412639868895"}},
      // row-Fishburn, Lambda 1+z
      {"A179525", 0, {"1", "1", "2", "7", "33", "197", "1419", "11966", "115575", "1257718", "15223822", "202860828", "2950665011", "46516215168", "790009447590", "14379745626739", "279256447482090", "5763290215111558", "125960271446527241", "2906289188751628643"}},
      // row-Fishburn, Lambda 1/(1-z)
      {"A158691", 0, {"1", "1", "3", "12", "61", "380", "2815", "24213", "237348", "2612681", "31915787", "428481472", "6271362282", "99388642292", "1695614865711", "30984649882928", "603790447393402", "12498732438500663", "273902239550757626", "6334968666307580051"}},
      // row-Fishburn, Lambda 1+z+z^2
      {"A207433", 0, {"1", "1", "3", "11", "56", "350", "2609", "22582", "222625", "2462969", "30219676", "407276420", "5981197376", "95073427910", "1626294895274", "29788176027819", "581704672430937", "12064521684969823", "264843222932272690", "6135057298705027024"}},
      // row-Fishburn, Lambda (1+z)/(1-z)
      {"A289313", 0, {"1", "2", "10", "74", "722", "8786", "128218", "2182554", "42456226", "929093538", "22590839466", "604225121258", "17630145814898", "557285515817970", "18970857530674554", "691929648113663802", "26919562120779248962", "1112769248605003393858", "48704349211392743606602", "2250158927468153553718154"}},
      // row-Fishburn, Lambda (1+z-z^2)/(1-z^2)
      {"A289316", 0, {"1", "1", "2", "8", "37", "219", "1557", "12994", "124427", "1344506", "16178891", "214522339", "3107144562", "48805300668", "826268787588", "14998055299920", "290550119360174", "5983278021430064", "130512410617529321", "3006012061455129053"}},
      // Fishburn direct form, Lambda (1+z-z^2)/(1-z^2)
      {"A289317", 0, {"1", "1", "1", "3", "7", "23", "84", "364", "1792", "9953", "61455", "417720", "3098515", "24902930", "215538825", "1998518430", "19761943208", "207571259703", "2307812703419", "27075591512866"}},
      // Fishburn direct form, Lambda (1+z)/(1-z)
      {"A289312", 0, {"1", "2", "6", "26", "142", "946", "7446", "67658", "697118", "8031586", "102312486", "1427905658", "21666671534", "355138949394", "6253348428598", "117720540700842", "2359368991571518", "50157679523340994", "1127327559500923974", "26709016625807923418"}},
      // Fishburn direct form, Lambda 1+z
      {"A138265", 0, {"1", "1", "1", "2", "5", "16", "61", "271", "1372", "7795", "49093", "339386", "2554596", "20794982", "182010945", "1704439030", "17003262470", "180011279335", "2015683264820", "23801055350435"}},
      // n! [z^n] sum prod (1-e^{-jz})
      {"A079144", 0, {"1", "1", "3", "19", "207", "3451", "81663", "2602699", "107477247", "5581680571", "356046745023", "27365431508779", "2494237642655487", "266005087863259291", "32815976815540917183", "4636895313201764853259", "743988605732990946684927", "134524576507397359610399611", "27227351554615603499781598143", "6131441362324488468032348796139"}},
      // brute force, Fishburn first-row triangle
      {"A175579", 1, {"1", "1", "1", "2", "2", "1", "5", "6", "3", "1", "15", "21", "12", "4", "1", "53", "84", "54", "20", "5", "1"}},
      // brute force, primitive row-Fishburn diagonal triangle
      {"A182319", 1, {"1", "1", "1", "2", "4", "1", "7", "16", "9", "1", "33", "83", "64", "16", "1", "197", "530", "486", "180", "25", "1"}},
      // fixed point f = sum prod ((1+zf)^j-1)
      {"A186737", 0, {"1", "1", "3", "14", "82", "563", "4390", "38273", "370090", "3951524", "46436236", "598606795", "8431113021", "129134793211", "2139840753676", "38161937079832", "728817179712481", "14837170081079164", "320656534559643735", "7329984468062242588"}},
      // fixed point f = 1+z+sum prod (f^j-1) - f
      {"A224885", 0, {"1", "1", "2", "15", "143", "1552", "18282", "228174", "2976534", "40256580", "561755676", "8066942027", "119104886610", "1809118800204", "28327453520403", "458854209551159", "7727223037965079", "136130623466875012", "2526349854311842166", "49724570281877830993"}},
      // sum prod ((1+z)^j-1)/(1-z^j)
      {"A207652", 0, {"1", "1", "3", "10", "45", "249", "1709", "13912", "131168", "1402706", "16757321", "221018769", "3188425939", "49925523804", "843121969923", "15272776193787", "295372123082865", "6073931908657770", "132329525329523223", "3044691799670213778"}},
      // sum prod (1-(1-z)^{2j-1})/(1-z^{2j-1})
      {"A207653", 0, {"1", "1", "4", "16", "77", "460", "3287", "27561", "265307", "2880875", "34821316", "463543454", "6737545832", "106158368798", "1802204594518", "32793160634292", "636683459975767", "13137118248246982", "287070448575006268", "6622644707103106925"}},
      // sum prod (1-(1-z)^j)/(1-z^j)
      {"A207651", 0, {"1", "1", "3", "8", "25", "83", "323", "1410", "7062", "39660", "248287", "1709505", "12843315", "104446836", "913968191", "8560027375", "85427505885", "904899664970", "10139054456975", "119802780498730"}},
      // recurrence b_n = n a_n - sum b_j a_{n-j}
      {"A207434", 1, {"1", "3", "16", "103", "796", "7104", "71807", "810239", "10095145", "137686648", "2040943180", "32679948256", "562281127266", "10347659040127", "202849692259846", "4220573966037231", "92900793975348826", "2156973952747274733", "52686155932369860221", "1350605860832381895768"}},
      // sum_{k>=1} prod (1-(z-1)^j)
      {"A035378", 0, {"2", "11", "72", "635", "7085", "95911", "1528541", "28044762", "582314535", "13500314080", "345696545788", "9690223054222", "295132850278639", "9705001713289680", "342693270841135600", "12932930349605422101", "519485442041267214922", "22128317667334713876374", "996347086019386652298515", "47282079380337433342617115"}},
      // sum (1+z)^{-k(k-1)} prod ((1+z)^{2j-1}-1)
      {"A207557", 0, {"1", "1", "3", "12", "64", "420", "3276", "29581", "303389", "3483053", "44245695", "616103046", "9330961666", "152700926414", "2685132170466", "50488787588936", "1010864433071206", "21470488933116138", "482176661100286182", "11415700804801064258"}},
      // n! [z^n] sum prod (e^{(2j-1)z}-1)
      {"A215066", 0, {"1", "1", "7", "127", "4315", "235831", "18911467", "2091412807", "305035062955", "56729101908151", "13102338649018027", "3679320979659518887", "1234515698986458346795", "487763952468349266962071", "224150079034073231822617387", "118541831524545132821950527367", "71482823074170432156935708529835", "48754752673169885408041075747369591", "37343346449085977673240499015231365547", "31917368084611944885770939678329060326247"}},
      // n! [z^n] sum e^{(k+1)z} prod (e^{(2j-1)z}-1)
      {"A209832", 0, {"1", "2", "12", "200", "6576", "353312", "28032192", "3077502080", "446470392576", "82695752049152", "19038594625539072", "5332477132779407360", "1785375992372231909376", "704147423230177089953792", "323094378183013059349757952", "170643791820813252598723543040", "102783366513990141604376955518976", "70032693662360644927579504414687232", "53593225749414205247977248373762424832", "45769740626329271778084784658311998341120"}},
      // n! [z^n] sum e^{2kz} prod (e^{(2j-1)z}-1)
      {"A214687", 0, {"1", "1", "11", "217", "7691", "430921", "35117531", "3927676537", "577640740331", "108115035641641", "25097054302205051", "7076531411753120857", "2382432541064412524171", "943997056642739165681161", "434864796716131476530668571", "230460477665217932140097413177", "139225561724599986218433107239211", "95111030202453777185708184041973481", "72953203449015250224030072149675164091", "62432225509611516886061470333560450473497"}},
      // sum prod ((1+z)^{2j-1}-1)
      {"A207569", 0, {"1", "1", "3", "18", "151", "1640", "21825", "343763", "6253234", "128993019", "2975165831", "75866604098", "2119310099700", "64361149952242", "2111222815441491", "74391641880144734", "2802300974537717340", "112379709083552152423", "4780136025081921948194", "214954914688567198802759"}},
      // sum prod ((1+z)^{3j-2}-1)
      {"A207570", 0, {"1", "1", "4", "34", "410", "6455", "125251", "2888305", "77157780", "2342972405", "79701049425", "3002132647515", "124039845584382", "5577660227565634", "271162541308698623", "14172237715785139175", "792418822364402364530", "47198077739119663907870", "2983413619934353599892285", "199467584513836871262108285"}},
      // sum prod ((1+z)^{3j-1}-1)
      {"A207571", 0, {"1", "2", "11", "105", "1390", "23520", "484247", "11742927", "327711230", "10343198878", "364237027076", "14156867852699", "601927703437645", "27790427952836499", "1384496764982434033", "74027620787319243688", "4228343290201028904807", "256946673653717460509502", "16551666142815138743519611", "1126599303828028812743716212"}},
      // n! [z^n] sum (z/(e^z-1))^k prod (e^{jz}-1)
      {"A196194", 0, {"1", "1", "4", "42", "804", "24200", "1052310", "62399232", "4838470280", "475205921136", "57651242228010", "8466308935131080", "1480085055633108012", "303741049766220682200", "72304996099042631680574", "19761618044081811015046320", "6145897155031392768635838480", "2157983333764641200509029284192", "849558268657643254476439218643026", "372674801923163429699735806638443256"}},
      // n! [z^n] sum e^{kz} prod (e^{jz}-1)
      {"A207214", 0, {"1", "1", "7", "85", "1759", "55621", "2501407", "151984645", "12004046719", "1196068161541", "146792747463007", "21762540250822405", "3834791755438306879", "792270319634586707461", "189687840256042278859807", "52103089179906338874671365", "16275196750916467736633834239", "5736758084157922763314725349381", "2266227413969046705379006069891807", "997185033782852870616669300963019525"}},
      // sum prod (((1+z)/(1+z^3))^j-1)
      {"A207386", 0, {"1", "1", "2", "6", "28", "172", "1269", "10879", "106343", "1167970", "14241792", "190919195", "2790920003", "44184957237", "753152722642", "13752229833566", "267809474619299", "5540559819166056", "121355678158129804", "2805498395990301867"}},
      // sum prod (((1+z)/(1+z^2))^j-1)
      {"A207397", 0, {"1", "1", "1", "2", "11", "74", "557", "4799", "47004", "516717", "6302993", "84502346", "1235198136", "19552296646", "333212892221", "6083009119262", "118433569748072", "2449663066933397", "53643715882853914", "1239875630317731463"}},
      // sum (1+z)^k prod ((1+z)^j-1)
      {"A207556", 0, {"1", "1", "3", "11", "55", "339", "2499", "21433", "209717", "2305719", "28141925", "377579731", "5523750291", "87508680045", "1492510215135", "27266981038343", "531245913925837", "10995334516297279", "240925208376757203", "5571653169126500083"}},
      // sin(2z)/(2cos 3z), odd coefficients
      {"A002439", 0, {"1", "23", "1681", "257543", "67637281", "27138236663", "15442193173681", "11828536957233383", "11735529528739490881", "14639678925928297567703", "22427641105413135505628881", "41393949926819051111431239623", "90592214447886493688036507587681", "231969423543894989257690172433129143", "687051872949101429716075902637226327281", "2330640193014931063017585202490874608196263", "8977220765593827294384825469501847565263767681", "38966520031501064708241399303059964064529134680983", "189320918307961834904462117789058282666933576006788881", "1023409776429490887726960719866571404072100379273323303303"}},
      // 1 + sum (-1)^k q^{k+1} prod (1-q^j)
      {"A003406", 0, {"1", "1", "-1", "2", "-2", "1", "0", "1", "-2", "0", "2", "0", "-1", "-2", "2", "1", "0", "-2", "2", "-2"}},
  };
  return table;
}

}  // namespace fishburn::oeis

// Frozen reference values for the statistics module, computed once with
// SciPy 1.15.3 (shapiro / levene(center='mean') / ttest_rel) on the literal
// samples below. Regenerate only if the sampling plan changes.
#pragma once

#include <vector>

namespace oracle {

struct ShapiroCase { std::vector<double> x; double w; double p; };
struct LeveneCase { std::vector<double> a; std::vector<double> b; double w; double p; };
struct PairedTCase { std::vector<double> a; std::vector<double> b; double t; double p; };

inline const std::vector<ShapiroCase>& shapiro_cases() {
  static const std::vector<ShapiroCase> cases = {
    {{0.5095548506954299, 0.4947353341046363, 0.598255521764066, 0.7516472529840569, 0.5696573437423077}, 0.8787443005071589, 0.3036594578223789},
    {{0.19562271067041181, 0.7819280966301403, 0.7255215559339977, 1.28626354637937, 1.0993491307604912, 1.017349822530202, 1.0866650132331492}, 0.8998462846965042, 0.3300514242546274},
    {{0.18825903132983113, 1.7797050457409354, 1.648231864026577, 0.38084769851446154, 0.9053345467430591, 1.9779538890748145, -1.6125069492472788, -0.5279187263663359}, 0.9350369365250831, 0.5630014280434041},
    {{-0.2748384395650473, -1.8242325879721908, -0.8796490601735698, -0.7936592709959076, -0.7688780646098987, 1.8890114123441337, 1.2537957082967326, 2.154543649721674, 1.9876941964007993, 2.0841066575488294}, 0.8508369828852557, 0.05943614719138723},
    {{0.6126535323968875, 0.5127611337470892, 0.6819332806735598, 0.6679829160653168, 0.5975666567335772, 0.6043691292889597, 0.6033100401473994, 0.5325553407651322, 0.6329186058205231, 0.7203608386356948, 0.5173539787590592, 0.5508884123559488}, 0.9514875799192191, 0.6588254871551495},
    {{0.7943875471416788, 0.2889803136626942, 0.8622394510939393, 0.396182701216506, 0.9078986285908094, 0.4198815592121087, 1.0541369570427834, 1.5740034589840193, 1.457432212394424, 0.6813041033234503, 2.9563055294961034, 1.981292427802095, 1.650448713723543, 1.1855577918015259, 1.657949291900074}, 0.9283556920079137, 0.25782784590940333},
    {{-1.1271455466001572, 2.024910611057768, 0.14027150154709478, 1.8321009164420672, 0.6872664873461396, -1.6697929916295582, 0.10171146373050632, 1.7594622530529573, 0.0818220239415215, 0.8548950209747299, 1.1247497847798273, 1.551740534385364, -1.2490508116806647, 2.0551634516735238, 1.812225772308917, 2.8502882684419344, 2.5652211047136317}, 0.9354942156857076, 0.2685593567464134},
    {{-1.1040223563248481, -0.9321397777546493, -1.0644397599748958, -0.3366237242551019, -0.7757676938274739, -1.1439160300239455, -0.8514798222406557, -0.051376862617964036, -0.2886866850537061, -1.0791365964237833, 2.1580484511158846, 2.384689766250273, 2.534082777834222, 1.8226265024345407, 2.033680822312641, 2.290015537530069, 1.7047798367210742, 1.852363264966876, 1.451187830539559, 2.2530441148674845}, 0.81553495589914, 0.0014868085518519975},
    {{0.6769539033165359, 0.5739811749064988, 0.6143771045323455, 0.6531842971997085, 0.5526470307803331, 0.5734885315378783, 0.554703522367214, 0.6214087100538291, 0.5409860087051154, 0.4249835317109188, 0.5511005609352551, 0.6520064645082845, 0.5343107150824534, 0.6830460873222428, 0.5501496999410533, 0.4823517508818346, 0.5495446322937042, 0.5941731910337162, 0.6423660785116495, 0.4903687702128276, 0.5134661335304087, 0.5402119305601785}, 0.9647229702452791, 0.590137376658032},
    {{1.529901959046697, 0.8700703840228733, 0.4867787400896058, 0.9937763542966609, 0.6950414542966904, 1.2055384987446727, 0.7876758156934491, 0.6699126905867481, 2.6979495965730274, 0.8702809361873116, 0.6256625101492734, 2.3373434236595023, 0.4965405200612855, 0.6348930311787815, 0.48496156905471044, 0.9687584045939122, 0.9356335081215412, 1.6060952109795021, 2.2889734697757005, 0.503014767861431, 1.0325369967452827, 1.253190584644795, 0.9102235750224519, 0.7497944709685272, 0.44611995780686836}, 0.8142772396786877, 0.0003972144381399572},
    {{1.3265165275438564, -0.8277390364717085, 0.39376183913947616, -1.2450401023375588, 0.2555738479698526, -1.6732253220717639, -0.3319299818092567, -1.5214573323668033, 2.71827205193214, 1.1649141773591527, 1.4569359889251325, 2.9619674726945124, 2.7279297536670972, 2.667883041873977, 1.518405083259724, 1.842864288188899, 2.884211489303487, 1.2241609953586559, 2.213154096801415, 1.1332860682954902, 2.0601113439128165, -1.2743680490338398, -1.3759265752233756, 0.27483240969950584, 2.6771574193738, 2.726225124447925, -0.5194100308488374, 1.0875409731798187}, 0.9127199267860467, 0.02300481633059341},
    {{-0.48246880428295014, -0.7854287101569531, -1.2539312851484241, -1.2390622890201877, -0.7497492119725351, -1.3041153478032517, -0.6312689163954615, -1.2963121973784748, -0.8198864554558749, -0.9988368246040682, -1.0990561617491776, -0.8803701972469922, -1.3506208626410947, -1.6928302418276293, -1.158884050306817, 2.5259254333341183, 2.049984448974853, 2.146677174509587, 1.4283780066697345, 2.219609497368739, 2.2268280297282836, 1.5582148305607415, 1.342605386261877, 2.7068915576395884, 1.6379623333821887, 2.0753756055053914, 2.52583148574738, 1.7877998744737849, 1.7125007776373762, 2.1866565950284844}, 0.8239700080286108, 0.00018516256732251723},
    {{0.6055480030773729, 0.5797843447065898, 0.5877946472665451, 0.6780024649918341, 0.5579277256136039, 0.5809300026671903, 0.6426142267058949, 0.5732021908822631, 0.745931870047031, 0.5123978076603889, 0.6755196231661732, 0.6446578434692681, 0.7625459022224573, 0.4612430404143393, 0.6200436129019042, 0.6830519344987738, 0.5624209759027494, 0.6085748422551165, 0.6050954619416588, 0.6863643909530873, 0.43998471382660054, 0.5952299853903198, 0.6986328077405144, 0.5966994884789141, 0.41397342507604196, 0.5620568029586533, 0.7065423242458958, 0.6532522281660929, 0.702912916777663, 0.5269129410206008, 0.6656982808440091, 0.5835153095942748, 0.6364768423947562}, 0.9702857887883214, 0.48812871864318264},
    {{0.8768604462841757, 0.7202365370023102, 0.4617724307079416, 0.5720094236490219, 0.4891741896414812, 1.0286728643636969, 1.23662982821782, 0.96439504043517, 0.7620990693605703, 0.7838638930554389, 1.095682635418932, 1.260634679416435, 0.9678326965069731, 1.4981138585278813, 1.9330516494099963, 1.0193491199555422, 0.7014743567107681, 0.7151543158264685, 1.8870027620768193, 0.7907062856343905, 0.7800101703139257, 1.1635770582730995, 1.1135799156385173, 0.3992604487431799, 0.3556190812941487, 0.43658944573254804, 0.7419149379568241, 0.4132709213742791, 0.7776225157366901, 1.4494987195016324, 0.40156875641867446, 0.5913635567828474, 1.2817543215746765, 2.5310897564021717, 2.926577542439074}, 0.8448671697618888, 0.00017673991111991953},
    {{1.8428170641762547, 1.9249850387056773, -1.8114194415443245, -0.764658467747225, -0.29559760017202663, 1.3475810053252557, 0.3018184921595086, 0.7674787615074865, 0.5436187751650943, -0.7990137931481098, 1.15886767471881, -1.6962191116158958, 2.620550374602007, 2.037213616988595, 1.8078561646312954, 2.746627774735283, 2.981510075200103, 2.2127055955426442, 1.1382471651332144, -1.056446250105027, 0.8473463241566237, 2.84964947336925, 0.9812148375257568, -0.20837834678627143, 1.8367991137724577, -1.380212701443873, -0.3174803942516595, 0.9332936833691052, 0.73819034832015, 0.6646607913779214, -1.5072853187700672, 2.5988585837497613, 2.149958240048374, 0.09467369690731697, -1.3546666266989513, -1.6249518289891896, 0.09176535216072423, 1.1376307254960318}, 0.9528132569784488, 0.11026084979629525},
    {{-0.9281770276709159, -0.7214380338514659, -0.9816760202643171, -0.5234970635507786, -0.7594274594443069, -1.1443531345001072, -0.4354792230471721, -0.9792340631236055, -1.1999049175058958, -0.8854631752119798, -0.7772460896026492, -1.1032801580550593, -0.9594515139553906, -0.13690542740256495, -0.989942362310295, -0.7582737262410952, -1.057305390203608, -0.5589874266019398, -1.3623303308582448, -1.551640158702443, 1.616035833033091, 2.0879054555914025, 1.819581974765109, 1.630553285433372, 1.4195595882934895, 1.5107244287475556, 2.7500397162273478, 2.0241953193199254, 2.9328041310960664, 1.2784326907818286, 2.2169878568548493, 2.421903131956867, 2.011506125361731, 2.3279490494226835, 1.7715110633820206, 2.05867205071215, 2.0825937379702744, 2.045773020336511, 1.8529233058294694, 2.5391531863820997}, 0.8381623292389419, 4.701560752916296e-05},
    {{0.622630105268678, 0.6311315731954518, 0.6615490599746523, 0.7357798539771254, 0.6841295363990357, 0.595206332086834, 0.6210962029432772, 0.5401299665973156, 0.5630559080906612, 0.5524112646473877, 0.5404758099403043, 0.3671753345574273, 0.5662120676985873, 0.6666085313959351, 0.527785253952263, 0.479131619046616, 0.6911559934433816, 0.5223995554024914, 0.463382900277013, 0.6714076325641464, 0.6204440929662141, 0.6525295445898766, 0.5710832930298572, 0.5759501676308884, 0.7032044211639572, 0.7466349208288984, 0.5141493852226882, 0.7099572541169231, 0.6534201891809027, 0.5350437352396411, 0.6549931419821238, 0.6415185041459806, 0.7241546096120671, 0.7549016252440492, 0.5003363042057232, 0.5717693279009592, 0.49879915447430156, 0.5955266409854012, 0.6085248956653865, 0.5649923387146475, 0.5009835224850523, 0.4984418704564221, 0.4822895214029953}, 0.9803209363387861, 0.6601260330732142},
    {{0.9859794554715181, 1.7556034719306945, 2.0360083498460897, 1.5259904569203417, 1.3571515052246774, 0.9309702082075798, 0.760642062317576, 0.677218773584095, 1.9106268138155116, 1.2414236689540261, 2.148389960397037, 1.7345426809194038, 0.3316660558261828, 1.153493120118432, 0.40508803186625175, 0.6868030953555471, 0.5376381600351549, 0.9273078941884455, 0.6083054491772669, 0.3812535730151421, 0.2964690009410011, 0.39973210005112714, 0.6954198007407428, 0.8911448202088349, 3.7268206249974964, 2.3687078788740012, 0.7321165925622934, 0.41064416087222855, 1.579338017726039, 1.099758665135665, 0.6325056970365934, 0.8010934119850729, 0.3453587542821569, 1.3601548459986854, 0.722200360356402, 0.9542740192574237, 0.5576882587002071, 2.3046972371388903, 2.274350515448669, 0.5561183606057644, 0.6759562386547605, 2.2320145789815355, 1.0643673933866404, 1.23839823224849, 1.9346797690428663, 0.8027161267444933}, 0.8816813947594163, 0.00022946530873107896},
    {{0.22735675176914016, -1.5767217793610826, -0.11538567551606649, 0.29954520651825023, 0.926002832755267, 0.8577413602866413, -1.2709692244446429, 2.8925506992972165, 1.0436171776138696, 2.7099501622456073, 1.6407147273637985, -1.5470109727299741, 2.3699949698515557, -0.30002828259900527, 2.264367160667123, -1.9358764097373449, 2.7074333945005664, -1.7771993555094128, -1.9139024679166403, -0.4055784624352403, -1.9638625217165115, 2.680248097597561, -1.441941728573927, 1.862955588777266, -1.0579265051436753, 2.603303466584644, 1.4576825317889543, 2.6966291645591465, 1.4477543639782744, 2.8037383461480028, 0.3496600359545661, 1.0948244680569106, 0.3212135044625719, 1.448477246741188, -0.6838005131425295, 1.4713428906357722, -1.6785014411043313, 0.32028002386232934, 1.6819377474895356, 2.715356866657789, -1.3455607005157237, 2.060269795849444, -1.1787268983544534, 1.227985903741533, -0.6380172856360522, 1.1904769594398683, 2.7094282921987665, -0.6915605234942006}, 0.9216539913782161, 0.003401636715180939},
    {{-0.9030397323701133, -0.7716134769842216, -1.4809144135722436, -1.1697017270514027, -0.8034181414728966, -0.7336560690681861, -0.7144129911733537, -0.8498757594212611, -0.8145778482184935, -1.0981413536085691, -1.1294214583511297, -1.037807288222158, -0.9149292260201516, -0.7835922254007004, -0.7907263137314612, -1.2203928614305821, -1.143800625956093, -0.869146219943849, -0.8328982664845204, -0.951474527870604, -1.1491879333660429, -1.1208484449601432, -0.8379844202159816, -1.0332562866273571, -0.6217175724796915, 1.8330946606070575, 2.441841842284554, 1.9241483930949836, 2.2074677971865446, 2.487708160442229, 1.5753893266191257, 2.0739425532627864, 1.4166715489819093, 1.8976652536203908, 2.4615961715082477, 2.5898629754640807, 1.7945613578070005, 1.5907781333945663, 1.2708210674707967, 2.8450321142771555, 1.265988285574386, 2.0593304699121706, 1.9218962295783186, 1.7311532265166225, 1.9916998565790938, 2.5223996713655086, 1.7362260985377338, 1.8055256849175125, 1.7433367866354363, 2.4573550504309325}, 0.8061693784151613, 1.2197691473993908e-06},
  };
  return cases;
}

inline const std::vector<LeveneCase>& levene_cases() {
  static const std::vector<LeveneCase> cases = {
    {{-1.2996402369618665, 2.3586166645241624, -0.15907979825155535, 0.27408333850461103, -0.27638884408095604, -0.11328696983834385, -0.1790076216683452, 1.0808208665830321, -0.8077399597716081, -0.19713484533007963, -0.20859284375555034, -0.8333770370682352, 2.0833922845341455, -0.08050651168099231, 0.7727186809464, -0.7400755738632285, 0.27341454989572866, 0.5130250510245039, 1.6756622185756924, -1.2887538265993996, -0.5743566499000328, -0.8082427104246972, -0.4906367956445855, -0.8137004372214022, -0.9291352963100736, 0.9379010468166206, -0.1648671843836973, 0.24791862723112584, -1.171165760547693, -0.0943305310822165, -0.6620425787057915, 1.0946082158006147, -1.411561466013741, -0.28094582930670714, -0.6936664415571855, -0.9378613782774428, 1.0301786768809418, -1.4436632402817233, -1.2119952438375179, 0.8473111941887614, 0.005400439940495041, 1.7733395323440788, 0.09913751381545603, -0.6085806346068722, 1.172260191852341, 2.073410657380847, -0.012170330923507786, 0.10978683804889759, 2.1425598925057723}, {3.400061035120131, 0.27565286653981214, 2.5363894614313867, -0.6041029472630424, 1.5973210428695486, 3.9413734245463914, 4.371037797806251, 3.6261143428136697, -1.9541847261839225, -3.9773772326309293, 1.2337122444463369, 1.284326437070563, 5.170930639332215, -0.9729437851134191, -0.8337871692805281, -2.0601682912529187, -1.5954150459722958, -0.37940401576337734, -0.5593152696165287, 0.9331875408081158, 1.966215892126219, 1.4982392672864497, -0.9329324398726289, 5.539381799575479, 4.097782546931669, -2.8984208890241954, 1.0158814176322104, 2.100039513777376, 0.8483210478521372, -0.4878540512708188, 0.6264090471558605, -3.3236463862650165, 2.413193686039482}, 25.703169590512363, 2.5175899777909287e-06},
    {{-4.064841035740194, -7.354629814507517, 2.3291495380206784, 1.7730521715729142, 1.3989713143309455, -0.011072502491497799, 2.455168469247263, 0.20645644398194216, 0.6011385521616233, -2.340829421838152, 1.9189008188620313, 2.3445481685273446, 2.6451659519054296, -0.8849791483994053, 0.35735822794307687}, {-0.02513233137221771, 1.1054316457308528, 1.053953161376729, 0.7936996477613374, 0.690032487160901, 0.38738312913634676, 0.15917187697847496, 0.25366647554134225, 0.03321560082049052, 1.1334636332374024, -0.15068121844587756, 0.10198122394496445, 0.9856500349376118, 0.22797157984029132, 0.657516553341557, -0.023665331949424107, 0.21999531603995165, 1.2389585246396237, 0.09658709355551959, 1.0471920707472888, 1.0652445546645235, 0.533146334488773, -0.19179679938142002, 0.6545531051203747, -0.10696061285527603, 1.2300982199144173, 0.33063491757132374, 0.3746655723536358, 0.800764942198139, 1.4428900348250937, 0.6988548714385784, -0.22435451209661017, 0.05161850313116667, 0.9107971435707276}, 24.320680002773425, 1.0597084447545077e-05},
    {{-1.0258105006268994, -0.3853940687998849, -0.43742744398423394, 0.24859079067945775, -0.7501598828273238, 0.0005518879895777504, 0.2903636690383505, -0.5793056916738901, 1.2302803078959534, -0.018183904269183027, -0.4430498712925234, -0.8029547360537184, -0.1586506026642708, 0.2778007875621041, -0.515062081705161, 0.43172714806212115, 0.410644536698763, 0.3535387757242438, -0.578879838422185, 0.5341192917447188, -0.6744197416010114, 0.7617645858615318, -0.1449791982534646, 0.49787676105995315, -0.2192184764906243, -1.1248055121630132, -0.264618654829017, 0.6096814884035047, -0.0449479585917608, -1.2933292181663385, -0.7685169951202092, -0.13576130983674914, 0.6892261225528429, -0.2596968686665972, -0.8723292150612513, 0.8592684533239723, -0.4333880604418765, 0.2670543057847714, -0.04043601561988354, -0.5393331497729581, 0.6935503696251555, -0.8156304738270074, 1.0712473953915753, -1.2574172379530386, 0.3611090042674302, -0.2934496290368909, -0.9044584368850126, 0.25635951130059964, 0.8910171776770379, 0.10644546820068086}, {1.9763288465054933, 5.19184420965997, 0.7822852282148505, 2.859645656483402, -3.1005917339538582}, 32.63275283576812, 5.171049919418479e-07},
    {{-3.2422413581175507, -5.22393952287938, -0.6568858950438842, 3.660945411976208, 0.8330639807984336, 1.4630701543598954, 6.219497942457091, 4.911203810764552, 0.597515122387471, -5.932089973795069, 0.5998405435768818, 1.246790246684492, -0.6432305509286187, -1.9479669857830222, 6.570413957709702, -1.9221774014144393, -1.920789573454965, -3.0745609866712083, 0.89555228733582, -0.1408179248413222, -3.472510571680005, -4.711669504349943, -2.9781902730064234, 1.1489148256829036, 3.687052120531117, 5.10144288081022, -0.23850436336576855, 6.676924126042933, -2.1850437901654547, 3.597416372131179, -2.3048236846980044}, {-0.26422028936733766, -0.772096591730953, 1.0047994971483438, 2.154449474736273, 3.4043024506180517, 3.3299507650935047, 4.641238163317614, 0.45471166044292277, -2.9164611812312873, -4.015435426435633, 4.692922001304091, 0.27617506379587253, -1.4160101981784643, -1.7293491401988912, -1.597633552305513, 0.032163075461646984, 0.39448264196995414, -2.165988336035999, 1.3875148687742789, -1.5671552456053948, -0.15234445203984803, -2.924748129694973, -0.3859982313781022, -1.5211907513696774}, 4.609518218964215, 0.03638919871601863},
    {{0.4785472204849364, -0.13608411024239886, -0.2601473107612389, 0.07320559247979379, -0.8810070759537751, -0.20692870640386332, -1.4209772185061411, 1.3435155376736339, -2.06672775803945, -1.151484795457569, 1.478705042628637, 1.2445328502372968, 1.4145191147710696, 0.41028856606675346, 0.2317133865263668, -1.209551326583035, -1.9429724713988168, 0.3505322253073799, -1.3437670240068567, -1.5809458194026516, 2.3442623894656434, 2.1973706665766692, -1.6568222995891817, 1.0656540882537218, -0.3403631615553213, 0.95510872926313}, {0.3483520027988322, 2.9575315912499742, 3.8932650310077035, -1.4026395389488713, 1.0526602966019938, -1.9901165211471423, -1.0782510951185649, 2.2057741123857806, 0.9896903618288895, 0.1535865426462702, 0.45538829913144285, 3.2544051340408133, 1.0630231454335175, -0.2260804104256251, 1.6044543327952063, -0.4649498459041499, 2.5879974926004796, 1.0720230852351698, -1.2529585982658116, 1.8256594453256878, 0.3934185239981595, -0.362699180428638, -0.4030204955898975, 1.0068152600530134, -2.685312204111301, 3.00604757345155, -0.560891885147935, 1.492207730687379, -1.495733659559258, 1.8056215964782565, -0.7230560064348057, 0.42169036417830386, 2.27581664936921}, 1.4061299539697008, 0.24061964960892845},
    {{-1.583836639245291, 0.7374782831769001, -0.5683235167474258, 2.3228929171251305, -0.21665543559930753, -0.3662415618975237, -1.2619610168745685, -1.072934186511988, 0.16880774386517172, 0.6145507453803533, 0.07060425859511033, 0.9555815830424981, -0.9237259811480474, 2.6129679158648775, -1.1171157610668638, 0.5386817874483272, 1.6201527629991992, 3.243587269094967, -0.9011863663661145, -2.361311061827074, 0.2430612976788731, 0.7347073936540868, -0.3281928764959879, -0.07827587342878903, -1.6089301645755452, 2.9193363539681423, -2.980113367966038, -1.7761023822939197, 0.44290719157525427, -2.380926831077075, -0.14241466275658898, 0.48178173818712955, 3.1500736803821585, 1.1708346656908188, -0.1257773791178646, 0.5273846812303399, -0.2400775048520863, 1.130468417502169, -1.07341863755832, 1.5307225589670008, -0.7663707724171228, 0.06574041279694134, 1.0247184215810585, -0.18439819812136385}, {0.5177667404649036, 0.9298783198551392, -0.7338573097360557, 0.5012299571287732, -0.7438313822144778, 1.0869125126884964, -0.11851483962069864, -3.056402350427606, 1.4299503161807383, -0.4748353290014775, -0.7418102848077583, 1.7364505428880002, 2.137460443029296, 1.7939098641252633, -0.2635247451478402, 1.0714455893633088, 0.35792025010961376, 1.1334652278024937, 0.8502978573324542, -0.762213527256302, 1.683423448731241, -0.504153307332194, 2.305732187160724, -2.4261880274498417, 0.27422860371570174, 0.5358990876613168, -0.1314135577028005, 1.78029720966611, 1.3165765238886462, 0.22052768241511472, 0.7509024847695436, 2.2171472278293134, 0.3656108566504266, 1.6508190450933713, 1.802269604443617, 2.7311158963476063, 1.288816618089506, 1.4800907018475566, -0.5256423527849516, 0.7078633182307599, -0.4244089716337449, -1.8781355089430303, 1.7764685587165747}, 0.29905917547363364, 0.5859056649895071},
    {{-0.21820272025086265, -0.6621117629227421, -0.7570778768337794, -0.18137482771137753, -0.21782184501004376, 0.3160356579738709, 0.3818116332605178, -0.49524704270690667, 0.5258390899077369, 0.2815537302329451, -0.7851157687936337, 0.04095204473904003, 0.3752418787903731, 0.5284329950965858, 0.32500946383294066, -0.36767447801354136, -0.7836299321555064}, {0.029556069382714878, 5.338296824766044, 4.153921428012239, 4.702932006731773, -3.2843963736999893, 0.4175852151399174, 2.934686494538215, 1.8906586773671383, 3.9134676040593424, -2.1878554314622924, 3.0216295899460452, -2.9819205286269646, 5.8694966164108795, -1.765889894527747, 4.0551394810739545, 1.153921845830145, -0.1188585975216413, 8.419210007968928, -1.4076356521190323, -2.0858548204972105, 1.4501927400300128, 4.714550240879165, 1.7022982447163424, 0.5182763381639133, 2.3833155166317566, 2.4301562599625903, -0.14402577334706412, 2.727587189966104, 0.4175655027461098, -5.809208972822938, -2.527712277914115, 5.7147368668431024, -0.36066482275005773, -3.6269767496649647, 3.0926359438061026, -0.24154468592114853, -3.4275344436608632, -3.290334223174388, -0.2398992434508762, 3.301256666202361, -3.8745505430380147, -2.6874245858436856}, 28.145052752761238, 1.9121779404671057e-06},
    {{-0.8557518288390846, -0.42363232327016714, -0.34279846412439635, 1.0712595699620813, -1.2128092364677168, -0.8363889011880531, 0.3905736292185738, -0.4913967224731931, -0.3868657397391224, -1.099474336707441, 0.7519252567975377, 0.4846110833091233, -0.5828841823517701, 0.20192928148410663, -0.45750138752874825, -0.5840727751536349, -0.5879631524426446, -2.0183806554642496, 0.27807372772494304, 0.04088409752066264, 0.3153184327706011, -0.709711969593039, -0.20316480423483327}, {4.092224724322342, 0.6327045904366263, 3.8864158793468953, 0.21971002442708298, -2.038103181013172, 1.54742313308817, 4.291677666398714, -1.3407491128604987, 1.5711170996400685, 1.905786704744978}, 15.07097282634418, 0.0005063532961483627},
    {{-0.6052856807010136, -3.582550866227321, 0.667508086299436, 0.6188565218979709, 0.3148993976391542, 0.2272808658501329, 1.8442666358771214, 0.09394299217801413, -0.7362978320424689, 0.7944152287400947, -2.511692029535319, -0.33052093583670916, -1.7645385443428472, -2.9785741872972804, 0.24632006078868002, 0.491005921156839, -0.5947324901402125, 0.8132473069309876, 0.16053477698756077, -0.5899541383008109, -2.086162881716332, 0.3132948711093962}, {-0.614713936551752, 0.8231021697658695, 1.6638188458934593, 0.31876903753822305, 1.1337675482917295, 0.2076153040356556, 0.3795479621057273, 1.7758996348068763, 0.8588121860856566, 0.49083991001384136, -0.9070228875375164, 1.8789729074360502, 0.8654464771625421, -0.3084334058514102, 0.05481520983159016}, 2.792840709290328, 0.10360563986585272},
    {{-3.942427170770614, 1.2640670857671465, -1.1976807650791248, -2.927384125026421, 3.3238013577046392, 0.8452269677445964, 0.7566015288472211, 2.4201691482170897, 2.0524925191656624, 3.3979290500499335, -0.49507617274665777, -5.430462911435076, -0.35847426153541967, 1.0433141172098443, 4.2295756392291635, 8.760806595586583, 1.3386493127353358, -4.097052007005631, -0.2391695487941672, 1.5397982565104715, 0.04933660958497433, -7.840167112575458, 3.5333525601502602, 0.2574048145333566, -3.5690919566622044, -0.954977722519676, -0.2034048964987907, -0.9435924288037272, 2.0071336465388674, -0.8927266212145553}, {0.42248657648361426, -0.5761978655737698, 0.04069977131542307, 1.5950382227538042, 1.2170586539294264, 0.7054226707047574, -1.6709902551251403, -0.8161244889579136, 0.6818592340860448, -0.4476763785235105, 0.7454899976281151, 1.1306042735765698, -0.34840851696195185, 1.8442476086104125, 1.5382197819715284, 2.60207531182569, -0.4493103861561901, 0.7278869699928313, 0.00945654142043767, 1.7952489188544958, 1.5621771890605975, 1.3895022336696454, 0.7735221038926784, 0.5693577021041252, 0.48395080100561244, 0.6147059332453474, 1.4462272133266985, 1.7396558958626847, 0.23596648851201774, -0.40514293723687855, 0.32627632503138737, -0.6853067308483749}, 15.439233396257126, 0.000222938349502023},
    {{-2.108043321781466, 6.272158597795985, -2.1283468366965295, -3.672657795086674, -0.17266169464746273, -2.2196118536979847, 1.8370922444672313, -5.333002500793268, -0.600016392756556, 2.1454279907719362, 4.170778305490069, -1.5603487580437616, 3.6476745445515193, -3.899489637951693, 0.21293311431530504, 2.4201515500507997}, {0.8894289707284765, 1.52352534034759, -3.0369056222776822, -1.4034562194531988, 2.1293170454776855, 3.4726467744038514, 1.3816762860236609, 2.7420762570388786, 0.8766833533266656, -0.26045896367524857, 4.022539876410767, -0.3093282981562191, 1.7861699354962832, -0.83020736674431, -3.483877035313804, 0.7921710624825349, 1.0248562227290308, -0.004434478679523957, 2.2698590007635677, 0.5620980334532922, -1.7999534465063314, -0.16798693236445716, 1.294049074453381, 1.4343628914992776, 0.01774317570075712, -0.9254341563228838, -0.8703111789137814, -0.14559386820631937, 1.2505977748445285, 0.868602030010371, 0.44239684027231735, 1.0047565576199462, 3.774306558891036, 1.2650168712512921, -0.08655865559122422, 3.2615909383527857, -3.8897021614786995, 0.04351010156462615, 1.653422680168905, 1.6912472299807457, 1.12808381403194}, 11.002482814491502, 0.001616923468503617},
    {{1.4452724296926789, 2.3588413440613722, 0.92213048683437, 1.5278544913452485, -0.37897915893681244, 3.4816360834294153, 0.14471056545034336, -2.402279545239224, 1.1579855871559226, 2.4873682021039465, 4.47888094952378, 1.1493070768400708}, {-4.490749750046867, 0.8233215077469394, 0.19465841635507475, 1.061554625245444, -3.0763753194319383, 1.7314245095873606, 0.8954880942523131, 1.9713914979608276, -1.0009773043098278, -1.682386797452355, 5.752710875464201, -4.466073862291749, 2.62631783394639, -1.3415171299936708, -0.025574584698960012, 1.3537106044396552, 0.9878238837696951, -0.6830350948920993, 4.1795902204109545, -0.25501149977191284, 5.7927261553345435, 0.8217917702485442, 1.649266337678285, -0.18438214965591648, 3.4433827538920374, -1.1649213631483541, 2.153818991488366, -1.2384156013273788, 1.2468673632001142, -2.1495775557304415, 3.3836848829147055, -2.4210893983943866, 0.5858648533137107, 0.5948425489490634}, 1.3938384257102439, 0.24410092398356376},
    {{0.8707160745917432, -1.4823505840290183, -0.044793036104756226, 1.1549416268492627, 2.5669162935699337, 4.1447811300659, -2.572154483172011, 0.9008638248722508, -2.305697849089982, -0.7211290109524737, 2.4031610636869, 0.12476289979887946, 3.1065997477266682, -2.5095277879125013, -0.7208586632492685, 0.785852303577268, -2.2205072135460244, 1.003734839644952, -0.17184497697799914, -0.04880429921646488, 1.567228768761198, -2.689945428030422, -3.599785172627642, 1.546778870689788, 0.27529753416920644, 2.596234998322542}, {3.566559912878437, -1.273571808271348, 2.353945853446974, 5.401178774789861, -1.2128685209430916, -2.5585542675644097, 1.6087535583973696, -0.1451861962473293, 5.7213025936681285, -0.8178425168137828, -1.5786945199745204, 1.702945336682371, 0.8227125634802883, 1.6987716457890005, -1.9002734897082245, 2.570014220389507, 3.150770870825316, 3.353326475829087, -2.4316866307568055, 0.1043671411725075, -2.1908946735647485, -0.9767758278242011, 3.580474157715958, 0.8403302771510971, -0.12873781563187447, -1.6745426042308642, 3.662354391944726, -0.9480880865053476, 2.5212656021292625, -4.507169782850299, -0.3169164419339999, 0.9470555084790957, 1.2506690134101786, 2.2832607424082103, 1.7735226357920413, 3.4526991792041755, -1.4609652168441887, -1.5479910043664193, 1.8711483566722835, -3.3845244963010033, -1.6570342941458174, -1.7284971464422356, 3.667553994220039, 4.394608529150465, -0.3264267042359438, 1.566562239456792, 8.71460246438203, 1.890466423718975}, 2.6377208693255403, 0.10872340963999871},
    {{2.78177740447447, 0.5944104700694849, -0.44563728610325426, -3.2317276878737538, 1.3952337973978306, 1.5046892154133542, 0.08602072385447386, 0.2599399875711696, 0.88520511516366, 1.0441016828538214, -2.2233993496312827, 4.269733170257117, -1.485942413451974, -3.0691083194720887, -1.3338106144590873, 1.5877828106604646, 0.14022785614906033, -0.22104521573448657, -1.6627266988750526, -0.7946958030545378, 2.032105531887645, 0.5155763121696341, -1.2668634758708572, 1.4743563153758383, -0.1851848544897743, -1.3030578121754959, 2.048445623697425, 0.5061008699595052, -0.19515019121735247, 0.38186487963906873, -0.42808698732886985, -1.747340952461631, -1.9745165465869379, -0.17348848810711834, 0.5767485488491209, 1.174420101485167, 0.5572659577775151, -3.752041196447522, 2.0211044425410916, -1.1701312432078212, -1.8477143543625405}, {0.48829176183806167, 0.3551104646041286, 0.4847341072372707, 1.627475602600693, 1.4711659763955813, 1.0342991779060304, 0.9945274677810109, 0.838813501963553, 0.037768895662049495, -0.6355090823803267, 0.3798184300669176, -0.786915973116322, 1.2442625203142799, 0.5294694724201918, 2.123541650004034, 2.6752723195811816, 1.317276910508745, 1.1070946668827741, -1.2204629390586936, 0.22758796560207112, -0.43769585631154895, -1.122083943432694, 1.3224336595047843, 0.45449996309991864}, 6.174576908893319, 0.01562831057807115},
    {{-5.817370327797756, -0.6177095026875926, -2.187904713700289, 1.2806756882956158, 0.7944205082195849, 3.6427245344359096, -0.7322864426005801, 1.233297696610512, 0.19454609354255153, 3.6652424466067655, -2.614320232952379, -3.854513149850037, 1.3374305827352664, -1.6920599690279756, 4.650878144088033, 3.475424690767813, -3.464912115061919, -1.8329991787393347, 6.522035203670648, -1.226043017590472, 3.7066471286786595, 4.174809027657781, -4.56555131404919, 0.10796715006321289, 1.8973193321767658, 2.3900739760522827, 5.376724956616286, 4.154800753084742, 0.01765528737887204, -1.230473884116014, 0.10825884196911373, -0.8356096553078938, 1.773259488092712}, {-1.7050269914875504, 0.817632740802896, 0.6058040098307542, 1.2839658063593793, 0.7709541788301639, 2.7748906101928204, 3.928911787111845, -0.29255733733984846, 0.8779285791534259}, 5.033889584305357, 0.03046026534722507},
    {{-0.2323870612149078, -0.3403235322967557, 0.591822189011548, -0.593892615845364, 0.8352203097381913, 0.6214262657833067, -0.33751060892702167, -4.377518422814956, 2.1898258958958357, -0.5802634555629864, 2.9277836463143587, 3.0324310956769054, -2.511958690586215, 0.5991350423004214, 5.033531158861109, 0.20581603966085923, -0.06359101175535475, -2.993117144968362, 1.4860097051296866, -0.3118153881882982, 0.5718255956750394, -0.4181284607150332, 0.819146624051123, 0.4400003397164952}, {0.5720604961130111, 2.550882871062666, 0.2086276876542621, 1.1060377377305026, 1.9744930464777664, 1.1712326431009878, 0.254015604308091, 0.9864885159253691, 0.24777313892675762, 1.7921937249741977, -0.028211620443191365, 1.0946321959264802, 1.2424414132578137, 0.4390571141992642}, 3.557747889425821, 0.06735563230078175},
    {{-0.2995849086269241, -0.7838407942614088, 2.0230048100125613, 1.3860286506870991, 0.43763849106178127}, {-5.38235084722621, -5.7649177733696675, 0.06594664350814644, -1.1941781150165713, 0.7404323507916482, -0.08179884068705057, 0.15330136378171272, 0.3287986152033195, -2.3897269221310933}, 3.1066912477403865, 0.10339707712202546},
    {{0.6796671253465751, 1.4910334703598194, -3.3993171600425, 2.3095466159863536, 0.5579494140578823, 1.2738666708730337, 2.415295879771641, -0.8614377643181037, -3.0670105567296226, 0.02917570716132264, 3.0358765217288837, 3.214848728838422, -2.8140455251050036, -1.1268614033643034, -1.8985512837802947, 1.374196126035557}, {0.08761987922826969, 0.307567842749904, 0.7225997364336354, 1.194131620859362, 0.16111903409985862, 0.5821842906760889, 0.15724756141624835, 0.6021801206627091, 0.16573699747150805, 1.0762985167073373, -0.8592175193647165, -0.0024590802616920593, 0.8261566101961253, 0.13523160981455273, 0.6899270594300155, 0.5551763354299174, 0.7400253093360959, 0.5990137381307543, 0.2461505677917009}, 31.240041751408317, 3.238457532033025e-06},
    {{-0.8787003088368276, -4.573255101294124, -0.734248384290881, 2.2283842996250276, 1.1305369596852868, 0.5652883701434955, -0.9312726076950935, 2.684767228384656, 1.3072381702562486, 3.8136826890431568, 1.3026504537290544, 1.6395527616891834, -1.836510104164139, 2.853906750045094, -0.5427971055471351, 1.1885991759137378, -0.739924954649937, -1.5920519514682216, 0.6371251108108436, -1.8822417399879119, 3.8816184263947857, -0.47240615647746975, -0.7115782179362627, 3.01525631077547, -1.741334591615623, 1.9905898642252935, 4.187315570441707, 1.2246966265801145, -0.8364753890131879, -0.531992260760502, 3.734258134844865, 3.407670525563897, 1.4149668673861748, -3.217870308329737, -3.7378275230223137, -1.8475977234066463, 0.98413166841546, 1.1547709774911425, -0.7663733312920293, -0.6867694302912289, 2.9853809818065926, -1.4309063398665305, -3.906800937058048, -0.2378436611974285}, {-2.6387188203816074, 4.165326476524802, 2.9341905008303524, -1.1415147056748398, 2.217099182286603, 0.957461077495154, -0.1921688864661948, -0.562279188833489, -1.0054174205510833, -1.376390064588717, 4.408204937376048, 2.3152597377042405, 0.9864241411302062, 5.1633749173472925, 7.234212380820711, -1.2258411594841028, 1.1665196161603308, 5.296603575665502, 0.7818403236487124, -0.28947962287337303, -3.19303082730849, 3.10060513812866, 1.5174911807186955, -4.471805887734556, -1.0247070341259996, -1.5099037566666946, 1.3383983574344487, -1.0893182330797173, 3.3869092058360706, -0.4938703797271896, 0.10983537869397031, -4.59042689308008, -2.6522639359749816, 5.343545934953895, 2.8801356792526196, 0.5389575813952322, -2.474923317814092, -1.3044548884452483, -0.5219429781967704}, 1.8110366182190087, 0.18213876340518118},
    {{2.3309428315733176, 0.94722511059352, -0.7005448117480433, -0.8422089284239274, 1.1869813616391554, 1.3180507063547404, -2.687146830000528, -1.302679691951691, 0.11852821758407801, 0.1870235079193598, 1.1721649831586036, -1.195140543393687, 0.7939983085768932, -0.216979450384041, -0.030017509750157347, -0.0388744644270054, -1.207165975512863, -0.016998873867488513, 1.3069118987157797, -0.4372382309039987, 0.8644338530609398, 1.3995277785723332, 0.04302984067557419, -1.1146725417653431, -2.560913918606688, -0.6160289481701797, 2.521437234298265, 1.5476534023462414, -0.16683219388813178, 0.01664375286299609, 0.03633199073185216, 0.8863535457546261, -0.32039322211126126, 0.2398281489646182, 0.6421472064047475, -0.20514877717238478, -0.20891784916529632, -0.12633265142149694, -2.4981673047077044, 0.6239402078215558, 1.7303243052896469, -0.6620635956755648, 2.8461534544687113, -0.25921261599166445, 1.3808354344155043, -1.9227857917631554, 1.5022653274010274}, {0.28771907069515085, -0.3964272300213805, 0.9878135217336355, 2.2574962552649214, 1.5164267749731177, 0.29868571834362856, 0.2037474187326062, 0.8559701224039449, -1.1565636709040794, 1.5944348301796933, 1.6217275316355177, 2.7280560473293067, -0.4544057513074561, 0.3257515241042307, 2.012018995204755, -1.4278325326859538, -0.19116737868458744, -0.8570392425338571, 0.5490821735977007, 0.33735099112263434, -0.48945544556170206, 1.0600302223379914, 1.9640232880727788, -0.27577608400477926, -0.27070541497303025, 0.30548177295848933, 0.5994949900440014, 2.6064120260132637, 1.794552927354518, 0.6360290193631933, 1.6607301226411266, -0.2914898897816377, 0.16804661110743835, 1.1702108530675754, -0.6510764506737254, 0.2733037507142215, 1.6916193476887686, 0.6303441705265256, 0.12510628108347682, 1.208424884231853, 2.89132857847125, 1.8653938603198879, -0.14658212613204236, 1.4059220807897879, 2.9900993950866313, 1.4754707148449029}, 0.11033421682913894, 0.7405278439220153},
  };
  return cases;
}

inline const std::vector<PairedTCase>& paired_t_cases() {
  static const std::vector<PairedTCase> cases = {
    {{0.68486397965466, 0.6237230089458858, 0.7065609677314321, 0.5842545223407156, 0.6437046381535055, 0.6662140717266187, 0.6651685697243831, 0.6684062379986135, 0.6355928997808926, 0.6430587050485335, 0.654449398099212, 0.7087851326216197, 0.6702912233179499, 0.6944680685053357, 0.6285878398454476, 0.5755078086962254, 0.7494635819735878, 0.6846764636649071, 0.6710882093754116, 0.6741545225657881, 0.548230894347514, 0.723828216924763, 0.655069858353159, 0.5853383278800256, 0.6217062537262945, 0.6940133152630769, 0.6037456169847535, 0.668152793320857, 0.6611770097322797, 0.6433500798667755, 0.663671969421725, 0.6469510538023595, 0.5779548023059607, 0.6970756653933372, 0.6212183321344553, 0.6807791642707981, 0.7205732877565623, 0.6285085942322894, 0.6516814078246294, 0.5698359136593446}, {0.6757688803411963, 0.6293192166547834, 0.6221703659881395, 0.5434620933518899, 0.6599859158548852, 0.6219415309260719, 0.6637795566821822, 0.5954343266571004, 0.6032279042135325, 0.5757590793733527, 0.6020711538628486, 0.6786939322716141, 0.6628723978487925, 0.6864017322793036, 0.5925277553640126, 0.5553077225049328, 0.7112415392929495, 0.6696943955609528, 0.6730518829640255, 0.6254080243964026, 0.5081350702766925, 0.704786930172816, 0.6435776534610207, 0.5885981562637027, 0.5852735945132083, 0.6647801794384355, 0.5404487267269212, 0.5784520679925412, 0.6379339659191106, 0.628767442561595, 0.6293700537850276, 0.661413855358565, 0.5430382719604389, 0.6836433283921389, 0.6316601188839469, 0.6187265465143109, 0.7177937967636197, 0.6020826375903515, 0.6005605011183057, 0.5126175508979168}, 6.8792534738616675, 3.140382758276428e-08},
    {{0.6633130653647256, 0.6164120993458339, 0.6446087586358075, 0.6209069622048689, 0.6465087361922206, 0.6561839151624917, 0.6590528556810126, 0.6290783380414107, 0.6150398417488264, 0.5921654483544535, 0.7234286978879754, 0.6369848547453556, 0.6489567093704851, 0.7221949537887307, 0.6350796824828027, 0.6936102926661544, 0.5265314312483403, 0.6783598730949431, 0.5749673759566297, 0.6018358662416294, 0.6545218609081196, 0.7223329015224981, 0.6954389684679854, 0.6350393568052414, 0.6090875933690822, 0.5902003704560518, 0.6538575437434042, 0.6267066371713064, 0.6326731763642531, 0.5995184588642892, 0.7022185797412643, 0.5655823162880352}, {0.6750847264499715, 0.5559972301874432, 0.6141776830167089, 0.646782393618898, 0.6232736510235871, 0.6185975874877199, 0.6574677461099597, 0.5892242312568869, 0.6237986980679383, 0.5591232211869069, 0.6690939530265667, 0.6075444838002881, 0.5993303050376003, 0.7050397330927448, 0.5816877008038923, 0.6909985589437685, 0.4866825063168981, 0.6406486383181234, 0.5795094227522164, 0.6125007843581616, 0.6282135681974133, 0.7590977624964388, 0.6455702544722992, 0.6298734098555924, 0.5654217833474731, 0.5302909325967989, 0.6157829017740636, 0.6171224643998898, 0.6147063740204242, 0.5390116633742077, 0.7040185269735613, 0.5953291050704409}, 4.374237400211251, 0.00012784722601918492},
    {{0.5403668226381523, 0.6251409375719952, 0.6067853700293552, 0.667509121495051, 0.6972122752283004, 0.6181296613076419, 0.6894281530084315, 0.7594597212579711}, {0.4778162406273941, 0.6414010962005723, 0.5781777294914004, 0.7389004552102245, 0.7356601733756845, 0.5675917282848574, 0.6584267409816178, 0.7523006926290658}, 0.41368456145506644, 0.6914852258815709},
    {{0.612606324572103, 0.7226684878461165, 0.6745844669669439, 0.6244403441101474, 0.7429262512557243, 0.6178948715699523, 0.7158105378810902, 0.6288003247630573, 0.6724056983485085, 0.6867679387382657}, {0.5657160191466579, 0.711686718559295, 0.6625019654003572, 0.6292359843645803, 0.7594611600495085, 0.6163557140320652, 0.7201696565454444, 0.6041889828334236, 0.7004103479369977, 0.6361040197847199}, 1.1521295615721128, 0.27895192683045716},
    {{0.6522226083671419, 0.712225947453768, 0.7044907370461412, 0.7156383295501155, 0.7011862709519767, 0.5793832757425864, 0.6390366759310543, 0.5314025004359269, 0.6609195531682532}, {0.6907599876994046, 0.6786583198606987, 0.7230382856364185, 0.6987159937634772, 0.7013889076010777, 0.5743117596561877, 0.6453704802203641, 0.5498894482621453, 0.6752548925855528}, -0.6362685465050965, 0.5423727006748535},
    {{0.5736849823398242, 0.636631648154514, 0.6568503972085539, 0.5926481183619817, 0.7148334290192374, 0.5792930898419831, 0.6214053415116386, 0.58732405019824, 0.6123608718454142, 0.6429887997884222, 0.6135850034889175, 0.599590744504525, 0.672175117040723, 0.6503808316252162, 0.5860216928132755}, {0.554049480416862, 0.6910389596797248, 0.6306759629641304, 0.5342804953697096, 0.6946360591898765, 0.5449597413838753, 0.5643402625775382, 0.5777222377390058, 0.6236065665174004, 0.6251382986832937, 0.5373008575902415, 0.6068192489043335, 0.619021024058108, 0.6304349070449966, 0.5552899507852708}, 2.795478501647989, 0.014307066690677207},
    {{0.623619160701204, 0.7124837658244108, 0.6478425632889978, 0.5717939237888665, 0.6556606998092127, 0.6489266665288437, 0.6506862473465191, 0.5346830166315817, 0.5617995962548845, 0.7110678746077334, 0.6576286253178754, 0.5604386729666457, 0.6095443845024063, 0.6015217480309032, 0.6796851457499948, 0.6183599729801871, 0.7074177799924872, 0.5713983092951094, 0.6410166187871544, 0.6581660756770096, 0.714842972296422, 0.5832227565542614, 0.6691620852661616, 0.6649511047811446, 0.657018253959205, 0.6932693541466971, 0.7024213122165346, 0.7031043937794385, 0.6842484434872211, 0.6320607920037472, 0.7212822842049398, 0.6914128087249068, 0.6533870950704991, 0.6296369624829932, 0.7179580687071734, 0.6360773955256648, 0.681138894117528, 0.6669018949323741, 0.616576847261071, 0.6433229460738603, 0.6493619605499159, 0.6840908186769117, 0.6337054505956092}, {0.6660388734391829, 0.6886513668540866, 0.639850659464046, 0.5262320605909431, 0.6531241452404969, 0.6120112160218204, 0.6641425498323205, 0.49428803219945433, 0.5527870971014177, 0.7006581005478926, 0.6599665391023462, 0.5339031455685799, 0.6590194741808487, 0.6124745663592077, 0.6001255228482191, 0.6036547514955692, 0.6938836398928709, 0.5751759510272338, 0.563703964447893, 0.6637547837417034, 0.663911055040838, 0.5851941085283429, 0.6180428972972459, 0.6440484158630502, 0.626809056459915, 0.6456405291719866, 0.6947486556819448, 0.6412682406807859, 0.6697254927095969, 0.6233374252480612, 0.6822860999561424, 0.6977180159265123, 0.6520746178918594, 0.5753530350016003, 0.7012676024621056, 0.6275769878974571, 0.6450336213638992, 0.7018227240645035, 0.6098145365895863, 0.6083182763272066, 0.6678060131620632, 0.6678284268941691, 0.6314777718807328}, 3.7689158710839403, 0.0005056656086635984},
    {{0.5398043595507822, 0.6270855788390075, 0.6419644003066705, 0.675603393775655, 0.7023160342555455, 0.673152928325027, 0.6110510491190606, 0.5942685603029862, 0.5935715006570952, 0.7026481279387915, 0.7130185538436045, 0.6573323835560235, 0.6501889342118232, 0.6677410498372989, 0.7779387815608899, 0.6210247669293462, 0.6449841763766402, 0.605032875941336, 0.6996399270428209, 0.6910362746795298, 0.6272161810341288, 0.6895866307682811, 0.6770540936067526, 0.7781616077218536}, {0.4668600719551272, 0.625195044994556, 0.5740990570871458, 0.6908114840497575, 0.6656466133979536, 0.6638752754880987, 0.5673378756757952, 0.5368441564658236, 0.6416972888736184, 0.7386577413101089, 0.6354203086236309, 0.702641391938776, 0.6432290324182062, 0.6102250989650997, 0.7268962493170594, 0.6558391941340571, 0.6329877294050644, 0.5969592936556039, 0.7034610494558442, 0.6887836960664695, 0.7187617292186302, 0.6632855206611477, 0.6809743819130373, 0.7407194511676111}, 1.3721306444396648, 0.18325831092440376},
    {{0.6487812111805229, 0.6847502083048325, 0.6479967882017612, 0.6319876457072392, 0.5846008846242647, 0.6389459695975632, 0.6622674396175011, 0.6763310034661457, 0.605533724459528, 0.634344175600244, 0.6994954290288329, 0.6518641922238195, 0.6454986418890929, 0.6911026174468414, 0.7007181270997656, 0.7062159528508626, 0.6642558560333566, 0.6096739083981461, 0.6918225679321285, 0.5868225020499602, 0.6328203296102071, 0.6521481565282602, 0.6744230782041711, 0.7336683284174802, 0.5781038491411254, 0.6457563878949191, 0.6958976371038695, 0.7077411710661982, 0.6173353261113743, 0.7155094103924169, 0.7025823501714149, 0.6115673355180673, 0.6847717545772638, 0.6444420264812193, 0.6286708225111511, 0.6503647562935461, 0.6110411319250157, 0.622117703583832, 0.6445493444730344}, {0.672486369043724, 0.6282966119244433, 0.5638648725760377, 0.5860534553185144, 0.5735260641276605, 0.6446868539764278, 0.6682231914703181, 0.665396809272913, 0.6018301283594706, 0.6520687689176825, 0.6943964547560977, 0.6464443363385537, 0.6418929913211863, 0.6766752995351805, 0.6880521831040348, 0.679583571198406, 0.6164581920521127, 0.5467493705975403, 0.7833887440508713, 0.5835807309517399, 0.6453117038011058, 0.6468020619031368, 0.6678723352647079, 0.7181553519226163, 0.5908879224979671, 0.5897631555648676, 0.6519402489797068, 0.6449657520655477, 0.5689649857436248, 0.6959732057436683, 0.6890834470275379, 0.5996815842158507, 0.6556283988805731, 0.6183496812168694, 0.5861799004907218, 0.6094112606032153, 0.6028037272893872, 0.6307737281748386, 0.575128142422239}, 3.5791187990973725, 0.0009623903542196942},
    {{0.6320149445596164, 0.6798017386126284, 0.7086176442129173, 0.6730393729818298, 0.7604057302484561, 0.6557923071517799, 0.7168908923120949, 0.6929995613555131, 0.6371131819002681, 0.6350959581655519, 0.6579652266119527, 0.7197326766066714, 0.6409680379599505, 0.6622388452846123, 0.5774253437709154, 0.6333946251333438, 0.6103961463032854, 0.6769911357027368, 0.5573986481772851, 0.6125908596914433, 0.5894501384757189, 0.6511583675075369, 0.6255205330391742, 0.5954614635086144, 0.6113181849522298, 0.6851210709046018, 0.6349091371486131}, {0.6204421558193792, 0.6911285280290245, 0.6621408111418174, 0.6165582053975072, 0.7950133811617021, 0.655112606966935, 0.6777343962882122, 0.6607514841976241, 0.6197953343597589, 0.6411102074341227, 0.6300106682271542, 0.6649770463748612, 0.6531605822406871, 0.6616331723124067, 0.5730806410043515, 0.6118000007433829, 0.5913005684957022, 0.6290539277310865, 0.5421241039231728, 0.61738287317784, 0.5815184452795754, 0.6438194546014911, 0.6075243043014888, 0.6410073353566983, 0.582251303444485, 0.6913261166845325, 0.5918517799578537}, 2.8656299441261592, 0.008134631359108685},
    {{0.6835451974997873, 0.5678708018186414, 0.6617051216019461, 0.6562084841511265, 0.6622969139463818, 0.6827836216858099, 0.6602175352743008, 0.6395914516337166, 0.6265087116509704, 0.6425177546065819, 0.7012093682093604, 0.7157327569184297, 0.6179535924778619, 0.5646913635418944, 0.585527712242171, 0.5921424619713282, 0.6584252088669645, 0.7092575684594022, 0.6264225784437488, 0.5518639560676336, 0.599042271538433, 0.7167132439417941, 0.7019855068903411, 0.7047892783608926, 0.6509675563083006, 0.6155897611261416, 0.6412082463578322, 0.6685751718949678, 0.6450916012830146, 0.6657775820127506, 0.6790819018730964}, {0.7186322431054213, 0.5923576726584152, 0.6114680535853537, 0.6451382398200157, 0.6236878002909635, 0.6514274866376818, 0.6762350002403611, 0.6781567957456309, 0.6612711283604629, 0.6443924200660572, 0.665787424128041, 0.7166198303701391, 0.648784595811684, 0.529614040734318, 0.5442366904811129, 0.5577836329707299, 0.6998847923284331, 0.7009439210469197, 0.6214650079292463, 0.4982293506452601, 0.6006728676835796, 0.6761592366829028, 0.6283842741950485, 0.7086533852070507, 0.6697302328381032, 0.634578729426785, 0.6478224089540319, 0.6515295414261483, 0.5511243283900824, 0.6085632442462704, 0.6683067114769402}, 1.8598587876466521, 0.0727363048005156},
    {{0.7465184865489048, 0.6205108433960888, 0.7822388218645805, 0.5951066930282799, 0.6755925943213738, 0.657092504535591, 0.6516321244285798, 0.6498296004660803, 0.7285914210512539, 0.7456428986368188, 0.5955932758253293, 0.739520234619547, 0.6981305788234344, 0.6856304497487158, 0.7501180099860202, 0.5603388935588127, 0.6805344241705885, 0.6263830869436146, 0.653645951511574, 0.6448875258205574, 0.5950472067311171, 0.6630982497844233, 0.6407030084464307, 0.6564716824970045, 0.6231075226755833, 0.612377069809786, 0.6423176205740685, 0.5628202935414945, 0.6655022092589947, 0.7337118824109441, 0.6489952929764471, 0.6855160415512419, 0.6332594692967117, 0.6245970290837614, 0.6177333278446142, 0.6918214544139434, 0.6668572432348514, 0.7147956987557056, 0.6803778952973482, 0.6227909017233025, 0.6903110527138542, 0.611503899483207, 0.7188692406406646}, {0.7237410305519776, 0.6420942413589849, 0.7781092118746998, 0.599575119642813, 0.6581098638844108, 0.581640707141352, 0.6578592328152039, 0.6252737966710684, 0.6919036079724891, 0.7472070803313654, 0.5751869182121682, 0.6881914516358897, 0.6328294756918874, 0.642835007897905, 0.7119307997740718, 0.5439983398718347, 0.6699380957843893, 0.6000615601769537, 0.6653498908463565, 0.6121716318364215, 0.5499958225514792, 0.6458450783647943, 0.6594393401673919, 0.6465064641472529, 0.5886435357703546, 0.5833777467959546, 0.6113817973430061, 0.5773714571539873, 0.640587050293599, 0.723587619164985, 0.6007923172226082, 0.6842940601371285, 0.618404522557227, 0.5908505452656675, 0.6316786619624484, 0.6548583203085188, 0.6310526579014593, 0.7118783957020937, 0.7053391005151157, 0.6027231361303667, 0.6678491843293128, 0.5876898907430896, 0.7166557321953297}, 5.415298306249994, 2.7393713438966575e-06},
    {{0.6506283291202292, 0.7079070726870743, 0.6544680712690698, 0.6838084937834676, 0.6444671096138876, 0.716892457911824, 0.6368291987611693, 0.651986111827454, 0.5798121760936065, 0.583911967313935}, {0.6521357971825593, 0.677976100660666, 0.6377670202452173, 0.6810565243509227, 0.6362201100343969, 0.7046385093877405, 0.6145311092035572, 0.5854838373490022, 0.5481558803774936, 0.5530582827026028}, 3.548092829191544, 0.00623449877729051},
    {{0.6145539372447002, 0.6409004028219842, 0.5673379126742962, 0.6750466827365049, 0.6130481254919934, 0.640729564172188, 0.662788997029769, 0.6607982029475691, 0.6104461948077212, 0.5986148811721392, 0.7121973078882428, 0.6703558432360206, 0.5980596371674928, 0.6628756324906171, 0.6979597459407852, 0.6473991596220832, 0.6414964549017431, 0.6869111432783438, 0.6547500741421913, 0.6537979431338333, 0.6083080249625618, 0.7143918276928207, 0.5960545772520862, 0.5834951984476349, 0.6929574331152976, 0.5440548714204823, 0.6479672909494116, 0.7488583651963909, 0.5987700066211279, 0.6094458935974986, 0.6881227202489901}, {0.5415667446130683, 0.6568732969483052, 0.5328210548845768, 0.6847395519738593, 0.6122528135400483, 0.5951519006950089, 0.6176179953230805, 0.5952530050734219, 0.5268388674521263, 0.518993608459455, 0.6974886029662047, 0.6662723929444878, 0.575529603315271, 0.673904471447399, 0.6968298236147958, 0.5901083241654042, 0.650795934679261, 0.7098866230006836, 0.6197181147510039, 0.5989545653982846, 0.5518492202343769, 0.6823218712338558, 0.5629910964130181, 0.5406791014529233, 0.6987943538056569, 0.5106995352431876, 0.587797985067338, 0.6842253515071752, 0.5843889671319792, 0.5578849844438994, 0.6653914080106595}, 5.63549826986743, 3.876798463616187e-06},
    {{0.7132491703083755, 0.6172664838370483, 0.6127556870037502, 0.6679573963471788, 0.6377188586632261, 0.6120519093705908, 0.6936015234081957, 0.6852739478370368, 0.5918780874862785, 0.6434056098534213}, {0.6793957159616681, 0.5948576882182215, 0.5801122041686753, 0.6595375108740565, 0.6860230283711961, 0.582629562215531, 0.6202906571112154, 0.6805377610821761, 0.5648689696746877, 0.6280358005884015}, 2.0595537166163926, 0.06953036165653154},
    {{0.5577270663501761, 0.6733465722404385, 0.6981513250413688, 0.628100754839627, 0.6537751574805659, 0.585546998329617, 0.6501823489601805, 0.5685077599301429, 0.5744457155283731, 0.6560135877144484, 0.7197833065749388, 0.6529688340723554, 0.6309811404438883, 0.6067446603851525, 0.5697860968815596, 0.6268335037767315, 0.665922715057686}, {0.5387927339576633, 0.6272750284741319, 0.6747367629558856, 0.641051761919368, 0.5507693889492093, 0.5919290024936181, 0.6213567778857239, 0.5680848186683108, 0.5733251936223042, 0.6337865522334108, 0.7215486696453874, 0.5814228643119634, 0.6389339120917433, 0.5594767950741826, 0.5220275605897469, 0.6006800793616354, 0.6675090273132488}, 3.128473801143623, 0.006481340306478982},
    {{0.7302655317084167, 0.6348430433285563, 0.6926545775048525, 0.7004206807346801, 0.7159333241316215, 0.6465068859840851, 0.6254704677994405, 0.6520578311159738, 0.6257873888745026, 0.6004143113188253, 0.5696604072702736, 0.7019328540072369, 0.5947848920626597, 0.6457147480559491}, {0.6943728506450818, 0.5845241959200472, 0.6927331456342563, 0.7109236823489881, 0.6845706190992529, 0.6145330082657592, 0.5666118188528497, 0.609967020162744, 0.6481418806959298, 0.5496715441782382, 0.54797468718104, 0.6999284875100922, 0.5401818359732626, 0.6440798873566146}, 3.5286126838545275, 0.003705151828059484},
    {{0.693828578030231, 0.6898858465602723, 0.6877916520441086, 0.737750678744444, 0.5969842024869758, 0.6183874835667323, 0.6847344368112974, 0.6253040091728616, 0.6578347635099918, 0.6944240065007619, 0.6298369588974327, 0.5576066704847629, 0.6253484297381247, 0.5674923842052432, 0.5810620186486777, 0.5985551565976278, 0.6849738568661926, 0.5811667169367922, 0.6238600312015082, 0.6850632844326242, 0.5867044415996838, 0.6585329532206369, 0.6973175598140879, 0.6405437708213624, 0.597803026322449, 0.6090922994120225, 0.6317477317343886, 0.591744263442331, 0.58389093479475, 0.6182418085859599, 0.630474199077981, 0.6357994692877421, 0.6548698672185622, 0.6216106750386714, 0.6545329178917195, 0.5778475599774248, 0.6634003373518683, 0.6555736458828196, 0.6668739564885321, 0.6395078208809805, 0.656902777812493, 0.6294825774785272, 0.6325978907230035}, {0.6927030689509102, 0.6802823184931557, 0.6490291333041838, 0.7600155052927278, 0.6196732020464337, 0.6109827649626877, 0.6931824940057355, 0.6335123418957815, 0.6479943558447372, 0.6613655863634079, 0.5880242276007557, 0.5346983777038815, 0.6100005197938988, 0.5704249977357717, 0.5837312809356616, 0.5706047312408217, 0.6836854403495181, 0.6236953770308202, 0.6164880710148845, 0.6312739262135278, 0.5668174968773398, 0.6237371172700085, 0.6768431168610142, 0.579087426309669, 0.496558850483001, 0.6040534145303719, 0.5584538277315816, 0.5691731854419653, 0.5641570305123944, 0.5621096238709853, 0.6156794445685341, 0.6279136344491362, 0.6036769456080434, 0.5921910891656754, 0.6387350129465175, 0.5514721623843536, 0.6160734641256247, 0.6809054389011082, 0.6647716499571923, 0.642543089459539, 0.5739717644586081, 0.5725279234081448, 0.6133568621700709}, 4.6420199977519, 3.3735313191887844e-05},
    {{0.6912243734143073, 0.5666816472906766, 0.6695299906927782, 0.6487793019881347, 0.526279764827452, 0.6176782332015429, 0.6108474826126974, 0.6052305770209842, 0.5846003031380074, 0.6195193880212753, 0.6988212595687671, 0.5674910916592821, 0.6631092569960885, 0.7181275460553127, 0.7381296813313497, 0.6539898440422556, 0.6306862563042436, 0.6779718256974283, 0.7086742287748944, 0.7766692873579601, 0.7142812223069182, 0.6053434761524116, 0.6839146535892219, 0.596092007614346, 0.6264736136641396, 0.613723429615201, 0.7230016648539592, 0.6234080558628817, 0.5980153428602717, 0.6011805537427699, 0.6345558892525592, 0.5876137812050388, 0.6548014287130093, 0.5719384445849616, 0.6449855170772663, 0.6963693622534982, 0.6710400133676587, 0.6975272999500747, 0.6466386381489033, 0.675159115018019, 0.664571185292969, 0.6825189159955922, 0.64374740843554, 0.65491722357369, 0.73559626301569, 0.6481341628449135, 0.6890797319749156, 0.6430058691885507}, {0.6379206464240322, 0.515952673717712, 0.6699480464016967, 0.6276891597742278, 0.531624413350071, 0.5224594057001789, 0.5527043006506744, 0.5742044473811356, 0.5453598662887641, 0.6140685830411489, 0.6032370288317093, 0.49884280242984747, 0.6303667199497177, 0.721497431747555, 0.743983568412469, 0.6696243841784514, 0.6294804548030593, 0.6409305836967036, 0.6722619463249623, 0.7837058314330635, 0.7337389287128762, 0.549528496790415, 0.6424340493547616, 0.6112696621483341, 0.5827459726265765, 0.6164702932686207, 0.6903602724947172, 0.632277073305681, 0.6138523370838409, 0.549197957651033, 0.6343890870113613, 0.5709100195902798, 0.6408018982872511, 0.5729511604440874, 0.6380747214090811, 0.6820168650133706, 0.6011783608470823, 0.6652757652212532, 0.6450359345343506, 0.6039451585418519, 0.6058385077370533, 0.7022304305443536, 0.6212964552650855, 0.6940642624117055, 0.7756442951637976, 0.625891900949145, 0.669624823831096, 0.6453896658970237}, 4.441976936514917, 5.39090417981856e-05},
    {{0.6657363282585818, 0.6759002250348086, 0.6303710983059777, 0.6194970493887731, 0.5854134802563036, 0.6965513592688779, 0.6125718226197324, 0.6210560089984818, 0.5555307271292467, 0.6418915073029131, 0.6376522304595235, 0.6682294470796487, 0.6964936882252308, 0.6940779002510249, 0.6558767642491969, 0.6609473164672321, 0.7415892120544247, 0.6539142118301505, 0.6269754984089321}, {0.6330617726660142, 0.7063352740433271, 0.6004564026418949, 0.6199387368575247, 0.5404587031322166, 0.6942769624877332, 0.5787407550616418, 0.6320515153887631, 0.5840512363664846, 0.6212974458283529, 0.6147382591006424, 0.6592110570102712, 0.7099490307440843, 0.7028733862215791, 0.6555561472675222, 0.7123603296045082, 0.738750216922193, 0.598339315713411, 0.5992211173271197}, 1.149189599576934, 0.26551946992589937},
  };
  return cases;
}

// 10-point worked example (standard normal draws).
inline const ShapiroCase& shapiro_worked_example() {
  static const ShapiroCase c = {{-0.34101073341336324, 0.05931826313574486, -1.057194169483087, -0.23577493735645666, -0.9492907771356762, 0.46471825286459145, 0.5058899104881047, -0.11443720929611362, 0.21500807957218906, -0.6120757138116556}, 0.9493976465758697, 0.66137875278159};
  return c;
}

// strongly bimodal sample, expected p < 0.05
inline const ShapiroCase& shapiro_bimodal_example() {
  static const ShapiroCase c = {{-0.0002541743193346629, 0.0006282314483681828, 0.00033535136663382465, 0.00024857701733062743, 7.260009102648843e-05, 99.99922645556359, 100.00054985128607, 99.99937735592117, 99.99821094910119, 99.99873369857009}, 0.6552810844120405, 0.0002540335389736343};
  return c;
}

struct BenchmarkStats { double t, p_raw, sw_w_without, sw_p_without, sw_w_with, sw_p_with, levene_w, levene_p; };
inline const BenchmarkStats& benchmark_stats_deep() {
  static const BenchmarkStats s = {8.999999999999996, 8.538051223166315e-06, 0.8948725516411469, 0.1922802817024737, 0.8751312559283603, 0.11467152134956965, 0.42320064896920634, 0.5235619697297507};
  return s;
}

inline const BenchmarkStats& benchmark_stats_shallow() {
  static const BenchmarkStats s = {3.3488765362215815, 0.008538780717598863, 0.9310651607789299, 0.4584507151068981, 0.9211979788424594, 0.36705500899447885, 1.0240047358295117, 0.3249811647644241};
  return s;
}

inline const BenchmarkStats& benchmark_stats_eegnet() {
  static const BenchmarkStats s = {11.853949933767133, 8.545868844736423e-07, 0.9169007123366343, 0.33182903367373195, 0.9418232901391017, 0.5734745364351417, 0.0009124087591240443, 0.9762350829802997};
  return s;
}

struct MagnitudeProbe { double freq_hz; double mag; };
// |H| of the reference 5th-order 0.5-50 Hz band-pass at fs 500
inline const std::vector<MagnitudeProbe>& bandpass_magnitude_probes() {
  static const std::vector<MagnitudeProbe> p = {
    {0.5, 0.7071067811898397},
    {1.0, 0.9996375203896546},
    {2.0, 0.9999999021925937},
    {5.0, 1.0000000000000209},
    {10.0, 0.9999999979315521},
    {20.0, 0.9999775419852995},
    {30.0, 0.9979890317285848},
    {34.0, 0.9922998444024136},
    {40.0, 0.9580413481386784},
    {45.0, 0.870799231228052},
    {50.0, 0.7071067811865475},
    {60.0, 0.3439864408112234},
    {80.0, 0.06969904113981268},
    {100.0, 0.01720347129932189},
    {150.0, 0.0007002575982023121},
    {200.0, 1.2499613494366103e-05},
  };
  return p;
}

}  // namespace oracle

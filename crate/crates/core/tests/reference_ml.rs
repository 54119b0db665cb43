//! Mittag-Leffler values against 25-digit references computed with mpmath
//! (series for small arguments, Talbot inversion of the Laplace transform on
//! the negative axis, cross-checked at two working precisions).

use hbdiff::special::MittagLeffler;

/// `(α, β, z, E_{α,β}(z))`
const MITTAG_LEFFLER: &[(f64, f64, f64, f64)] = &[
    (0.1, 0.5, -50.0, 0.008884500669519018),
    (0.1, 0.5, -30.0, 0.01466399707611683),
    (0.1, 0.5, -17.0, 0.02540549880753449),
    (0.1, 0.5, -10.0, 0.04194708437535106),
    (0.1, 0.5, -6.5, 0.06218102663491711),
    (0.1, 0.5, -3.0, 0.1199781987404337),
    (0.1, 0.5, -1.2, 0.22886120895415962),
    (0.1, 0.5, -0.4, 0.3806333345482603),
    (0.1, 0.5, 0.3, 0.8692859001903738),
    (0.1, 0.5, 1.7, 5.0786380067470936e+89),
    (0.1, 1.0, -50.0, 0.018378057012219194),
    (0.1, 1.0, -30.0, 0.03026597587087465),
    (0.1, 1.0, -17.0, 0.05222285125446007),
    (0.1, 1.0, -10.0, 0.08569695701065469),
    (0.1, 1.0, -6.5, 0.12610839114979167),
    (0.1, 1.0, -3.0, 0.23855934978253857),
    (0.1, 1.0, -1.2, 0.4400807689106189),
    (0.1, 1.0, -0.4, 0.7030796353816415),
    (0.1, 1.0, 0.3, 1.4564737463144946),
    (0.1, 1.0, 1.7, 3.576865844058307e+88),
    (0.1, 1.3, -50.0, 0.02136988659426592),
    (0.1, 1.3, -30.0, 0.03517213343678809),
    (0.1, 1.3, -17.0, 0.06062190224520751),
    (0.1, 1.3, -10.0, 0.0993153750877052),
    (0.1, 1.3, -6.5, 0.145860747779111),
    (0.1, 1.3, -3.0, 0.27444997857063536),
    (0.1, 1.3, -1.2, 0.5016747627773449),
    (0.1, 1.3, -0.4, 0.7925854616090802),
    (0.1, 1.3, 0.3, 1.5967202439152204),
    (0.1, 1.3, 1.7, 7.280410836674754e+87),
    (0.1, 2.0, -50.0, 0.020374243028672273),
    (0.1, 2.0, -30.0, 0.033504927318870496),
    (0.1, 2.0, -17.0, 0.0576582402585256),
    (0.1, 2.0, -10.0, 0.09423758882845827),
    (0.1, 2.0, -6.5, 0.13801460621280282),
    (0.1, 2.0, -3.0, 0.25771343574638134),
    (0.1, 2.0, -1.2, 0.4649984261928538),
    (0.1, 2.0, -0.4, 0.7231262745500479),
    (0.1, 2.0, 0.3, 1.4005543166203356),
    (0.1, 2.0, 1.7, 1.7742443780517752e+86),
    (0.1, 0.1, -50.0, 3.609298618595192e-05),
    (0.1, 0.1, -30.0, 9.788756546236551e-05),
    (0.1, 0.1, -17.0, 0.00029142201050740604),
    (0.1, 0.1, -10.0, 0.0007846740130585958),
    (0.1, 0.1, -6.5, 0.00169890279898414),
    (0.1, 0.1, -3.0, 0.00607454077992214),
    (0.1, 0.1, -1.2, 0.020618989929014554),
    (0.1, 0.1, -0.4, 0.052358851952774524),
    (0.1, 0.1, 0.3, 0.21975918277524625),
    (0.1, 0.1, 1.7, 4.241729249615239e+90),
    (0.1, 1.1, -50.0, 0.019632438859755616),
    (0.1, 1.1, -30.0, 0.03232446747097085),
    (0.1, 1.1, -17.0, 0.055751596985031765),
    (0.1, 1.1, -10.0, 0.09143030429893453),
    (0.1, 1.1, -6.5, 0.13444486290003205),
    (0.1, 1.1, -3.0, 0.2538135500724872),
    (0.1, 1.1, -1.2, 0.4665993592411509),
    (0.1, 1.1, -0.4, 0.7423009115458962),
    (0.1, 1.1, 0.3, 1.5215791543816486),
    (0.1, 1.1, 1.7, 2.104038731799003e+88),
    (0.1, 2.1, -50.0, 0.019592515139426555),
    (0.1, 2.1, -30.0, 0.03221650242270432),
    (0.1, 2.1, -17.0, 0.05543186822008673),
    (0.1, 2.1, -10.0, 0.09057624111715416),
    (0.1, 2.1, -6.5, 0.13261313750572265),
    (0.1, 2.1, -3.0, 0.2474288547512062),
    (0.1, 2.1, -1.2, 0.4458346448392885),
    (0.1, 2.1, -0.4, 0.6921843136248802),
    (0.1, 2.1, 0.3, 1.3351810554011183),
    (0.1, 2.1, 1.7, 1.0436731635598673e+86),
    (0.1, 1.2, -50.0, 0.020630091345040444),
    (0.1, 1.2, -30.0, 0.03396041795469357),
    (0.1, 1.2, -17.0, 0.05855208288980859),
    (0.1, 1.2, -10.0, 0.09597067018128433),
    (0.1, 1.2, -6.5, 0.14102956049411472),
    (0.1, 1.2, -3.0, 0.2657744853464302),
    (0.1, 1.2, -1.2, 0.4871147057255224),
    (0.1, 1.2, -0.4, 0.7720902364147042),
    (0.1, 1.2, 0.3, 1.5681404942329025),
    (0.1, 1.2, 1.7, 1.2376698422347086e+88),
    (0.1, 2.2, -50.0, 0.01871973162651652),
    (0.1, 2.2, -30.0, 0.030778753134751605),
    (0.1, 2.2, -17.0, 0.05294983695559798),
    (0.1, 2.2, -10.0, 0.08650028553480983),
    (0.1, 2.2, -6.5, 0.12661014753223537),
    (0.1, 2.2, -3.0, 0.23605008057134877),
    (0.1, 2.2, -1.2, 0.42478704302163667),
    (0.1, 2.2, -0.4, 0.6584869571009306),
    (0.1, 2.2, 0.3, 1.2653398631195525),
    (0.1, 2.2, 1.7, 6.139253903293335e+85),
    (0.3, 0.5, -50.0, 0.004391817437026719),
    (0.3, 0.5, -30.0, 0.0073551451503853045),
    (0.3, 0.5, -17.0, 0.013085145823495795),
    (0.3, 0.5, -10.0, 0.02247280492110131),
    (0.3, 0.5, -6.5, 0.0348762236565894),
    (0.3, 0.5, -3.0, 0.07569461643574946),
    (0.3, 0.5, -1.2, 0.17190816325790645),
    (0.3, 0.5, -0.4, 0.33723857169374366),
    (0.3, 0.5, 0.3, 0.9590721736943902),
    (0.3, 0.5, 1.7, 2841.0392856007793),
    (0.3, 0.5, 5.0, 3.288277653738324e+94),
    (0.3, 1.0, -50.0, 0.015228201501814696),
    (0.3, 1.0, -30.0, 0.025182617502927662),
    (0.3, 1.0, -17.0, 0.04377997312024058),
    (0.3, 1.0, -10.0, 0.07264972907277209),
    (0.3, 1.0, -6.5, 0.1083071929209438),
    (0.3, 1.0, -3.0, 0.21180263319643577),
    (0.3, 1.0, -1.2, 0.4101085918257019),
    (0.3, 1.0, -0.4, 0.6842266862454042),
    (0.3, 1.0, 0.3, 1.472813738457436),
    (0.3, 1.0, 1.7, 1172.6853642132423),
    (0.3, 1.0, 5.0, 2.2491502775548076e+93),
    (0.3, 1.3, -50.0, 0.019695435969963707),
    (0.3, 1.3, -30.0, 0.03249391274990241),
    (0.3, 1.3, -17.0, 0.05624823687527997),
    (0.3, 1.3, -10.0, 0.0927350270927228),
    (0.3, 1.3, -6.5, 0.13718350878139327),
    (0.3, 1.3, -3.0, 0.2627324556011881),
    (0.3, 1.3, -1.2, 0.49157617347858173),
    (0.3, 1.3, -0.4, 0.7894332843864896),
    (0.3, 1.3, 0.3, 1.5760457948581201),
    (0.3, 1.3, 1.7, 689.226684831319),
    (0.3, 1.3, 5.0, 4.4983005551096136e+92),
    (0.3, 2.0, -50.0, 0.021568397368757573),
    (0.3, 2.0, -30.0, 0.035470517574399535),
    (0.3, 2.0, -17.0, 0.061042273552909865),
    (0.3, 2.0, -10.0, 0.09975479604448187),
    (0.3, 2.0, -6.5, 0.14603097177108787),
    (0.3, 2.0, -3.0, 0.2719572978034493),
    (0.3, 2.0, -1.2, 0.4861628912660857),
    (0.3, 2.0, -0.4, 0.7422135597978695),
    (0.3, 2.0, 0.3, 1.3391302052713006),
    (0.3, 2.0, 1.7, 198.6994455726603),
    (0.3, 2.0, 5.0, 1.0522488491962634e+91),
    (0.3, 0.3, -50.0, 9.029779526985106e-05),
    (0.3, 0.3, -30.0, 0.0002469007895996523),
    (0.3, 0.3, -17.0, 0.0007459099554728213),
    (0.3, 0.3, -10.0, 0.002051786303227615),
    (0.3, 0.3, -6.5, 0.004551041428543046),
    (0.3, 0.3, -3.0, 0.017243316421744134),
    (0.3, 0.3, -1.2, 0.06286443419573301),
    (0.3, 0.3, -0.4, 0.16650204891793172),
    (0.3, 0.3, 0.3, 0.6620273802910914),
    (0.3, 0.3, 1.7, 4046.944169407694),
    (0.3, 0.3, 5.0, 9.614982187699846e+94),
    (0.3, 1.3, -50.0, 0.019695435969963707),
    (0.3, 1.3, -30.0, 0.03249391274990241),
    (0.3, 1.3, -17.0, 0.05624823687527997),
    (0.3, 1.3, -10.0, 0.0927350270927228),
    (0.3, 1.3, -6.5, 0.13718350878139327),
    (0.3, 1.3, -3.0, 0.2627324556011881),
    (0.3, 1.3, -1.2, 0.49157617347858173),
    (0.3, 1.3, -0.4, 0.7894332843864896),
    (0.3, 1.3, 0.3, 1.5760457948581201),
    (0.3, 1.3, 1.7, 689.226684831319),
    (0.3, 1.3, 5.0, 4.4983005551096136e+92),
    (0.3, 2.3, -50.0, 0.01956863205262485),
    (0.3, 2.3, -30.0, 0.03215098274752002),
    (0.3, 2.3, -17.0, 0.05523280743806413),
    (0.3, 2.3, -10.0, 0.09002452039555182),
    (0.3, 2.3, -6.5, 0.1313798504967557),
    (0.3, 2.3, -3.0, 0.2426809007321836),
    (0.3, 2.3, -1.2, 0.4281975906115953),
    (0.3, 2.3, -0.4, 0.6444661005053263),
    (0.3, 2.3, 0.3, 1.130434017571002),
    (0.3, 2.3, 1.7, 116.29379151332962),
    (0.3, 2.3, 5.0, 2.104497698392529e+90),
    (0.3, 1.6, -50.0, 0.021890941451546762),
    (0.3, 1.6, -30.0, 0.03605828652657998),
    (0.3, 1.6, -17.0, 0.06223495715717776),
    (0.3, 1.6, -10.0, 0.10215074814545791),
    (0.3, 1.6, -6.5, 0.15031676919475517),
    (0.3, 1.6, -3.0, 0.28383668431537123),
    (0.3, 1.6, -1.2, 0.5188886125572668),
    (0.3, 1.6, -0.4, 0.8120230604020305),
    (0.3, 1.6, 0.3, 1.5393442877027275),
    (0.3, 1.6, 1.7, 404.772024895748),
    (0.3, 1.6, 5.0, 8.996601110219225e+91),
    (0.3, 2.6, -50.0, 0.01675081979813676),
    (0.3, 2.6, -30.0, 0.027498621307064763),
    (0.3, 2.6, -17.0, 0.047169224383611694),
    (0.3, 2.6, -10.0, 0.07670851015639112),
    (0.3, 2.6, -6.5, 0.11165073407118573),
    (0.3, 2.6, -3.0, 0.20480957374242645),
    (0.3, 2.6, -1.2, 0.35742669278988976),
    (0.3, 2.6, -0.4, 0.5316088036353419),
    (0.3, 2.6, 0.3, 0.9110813187051297),
    (0.3, 2.6, 1.7, 67.90393052433535),
    (0.3, 2.6, 5.0, 4.208995396785051e+89),
    (0.5, 0.5, -50.0, 0.00011277028156766193),
    (0.5, 0.5, -30.0, 0.00031291770525374203),
    (0.5, 0.5, -17.0, 0.000971083552422163),
    (0.5, 0.5, -10.0, 0.0027796561095304283),
    (0.5, 0.5, -6.5, 0.006452727865941375),
    (0.5, 0.5, -3.0, 0.027186130003586436),
    (0.5, 0.5, -1.2, 0.10994468323266862),
    (0.5, 0.5, -0.4, 0.2958744694298517),
    (0.5, 0.5, 0.3, 1.0003143534005858),
    (0.5, 0.5, 1.7, 61.24561462379073),
    (0.5, 0.5, 5.0, 720048993373.8694),
    (0.5, 1.0, -50.0, 0.011281536265323773),
    (0.5, 1.0, -30.0, 0.01879588886141675),
    (0.5, 1.0, -17.0, 0.03313049999972554),
    (0.5, 1.0, -10.0, 0.05614099274382259),
    (0.5, 1.0, -6.5, 0.08580567010489461),
    (0.5, 1.0, -3.0, 0.17900115118138996),
    (0.5, 1.0, -1.2, 0.37853741692923976),
    (0.5, 1.0, -0.4, 0.6707877852947615),
    (0.5, 1.0, 0.3, 1.4537492328427655),
    (0.5, 1.0, 1.7, 35.69495590602528),
    (0.5, 1.0, 5.0, 144009798674.66104),
    (0.5, 1.3, -50.0, 0.01704369505643831),
    (0.5, 1.3, -30.0, 0.02825375410452589),
    (0.5, 1.3, -17.0, 0.049337017350947344),
    (0.5, 1.3, -10.0, 0.08240421615182417),
    (0.5, 1.3, -6.5, 0.123749865461523),
    (0.5, 1.3, -3.0, 0.2459623562333845),
    (0.5, 1.3, -1.2, 0.4815160724141832),
    (0.5, 1.3, -0.4, 0.791480427155642),
    (0.5, 1.3, 0.3, 1.5332215751126594),
    (0.5, 1.3, 1.7, 25.598116308384817),
    (0.5, 1.3, 5.0, 54828964091.99848),
    (0.5, 2.0, -50.0, 0.02217209595641638),
    (0.5, 2.0, -30.0, 0.03652241211302977),
    (0.5, 2.0, -17.0, 0.06302967591911225),
    (0.5, 2.0, -10.0, 0.10339932663698949),
    (0.5, 2.0, -6.5, 0.1519590593189521),
    (0.5, 2.0, -3.0, 0.28490429471865863),
    (0.5, 2.0, -1.2, 0.5087447343360103),
    (0.5, 2.0, -0.4, 0.763371575831041),
    (0.5, 2.0, 0.3, 1.28039425237902),
    (0.5, 2.0, 1.7, 11.341422602755333),
    (0.5, 2.0, 5.0, 5760391946.720766),
    (0.5, 0.5, -50.0, 0.00011277028156766193),
    (0.5, 0.5, -30.0, 0.00031291770525374203),
    (0.5, 0.5, -17.0, 0.000971083552422163),
    (0.5, 0.5, -10.0, 0.0027796561095304283),
    (0.5, 0.5, -6.5, 0.006452727865941375),
    (0.5, 0.5, -3.0, 0.027186130003586436),
    (0.5, 0.5, -1.2, 0.10994468323266862),
    (0.5, 0.5, -0.4, 0.2958744694298517),
    (0.5, 0.5, 0.3, 1.0003143534005858),
    (0.5, 0.5, 1.7, 61.24561462379073),
    (0.5, 0.5, 5.0, 720048993373.8694),
    (0.5, 1.5, -50.0, 0.019774369274693525),
    (0.5, 1.5, -30.0, 0.03270680370461944),
    (0.5, 1.5, -17.0, 0.05687467647060438),
    (0.5, 1.5, -10.0, 0.09438590072561774),
    (0.5, 1.5, -6.5, 0.14064528152232392),
    (0.5, 1.5, -3.0, 0.2736662829395367),
    (0.5, 1.5, -1.2, 0.5178854858923002),
    (0.5, 1.5, -0.4, 0.8230305367630962),
    (0.5, 1.5, 0.3, 1.5124974428092186),
    (0.5, 1.5, 1.7, 20.408797591779578),
    (0.5, 1.5, 5.0, 28801959734.73221),
    (0.5, 2.5, -50.0, 0.019556558080871672),
    (0.5, 2.5, -30.0, 0.03211591959623234),
    (0.5, 2.5, -17.0, 0.05511590141652281),
    (0.5, 2.5, -10.0, 0.08966006733630105),
    (0.5, 2.5, -6.5, 0.13046783702785353),
    (0.5, 2.5, -3.0, 0.23836523509378046),
    (0.5, 2.5, -1.2, 0.40937938805332474),
    (0.5, 2.5, -0.4, 0.5915710604223976),
    (0.5, 2.5, 0.3, 0.9346475079300667),
    (0.5, 2.5, 1.7, 6.083189766326666),
    (0.5, 2.5, 5.0, 1152078389.144153),
    (0.5, 2.0, -50.0, 0.02217209595641638),
    (0.5, 2.0, -30.0, 0.03652241211302977),
    (0.5, 2.0, -17.0, 0.06302967591911225),
    (0.5, 2.0, -10.0, 0.10339932663698949),
    (0.5, 2.0, -6.5, 0.1519590593189521),
    (0.5, 2.0, -3.0, 0.28490429471865863),
    (0.5, 2.0, -1.2, 0.5087447343360103),
    (0.5, 2.0, -0.4, 0.763371575831041),
    (0.5, 2.0, 0.3, 1.28039425237902),
    (0.5, 2.0, 1.7, 11.341422602755333),
    (0.5, 2.0, 5.0, 5760391946.720766),
    (0.5, 3.0, -50.0, 0.014653924399656067),
    (0.5, 3.0, -30.0, 0.024004561948914756),
    (0.5, 3.0, -17.0, 0.041008051567479546),
    (0.5, 3.0, -10.0, 0.0662592710727374),
    (0.5, 3.0, -6.5, 0.0956592216978187),
    (0.5, 3.0, -3.0, 0.17129584765663153),
    (0.5, 3.0, -1.2, 0.28572782500862526),
    (0.5, 3.0, -0.4, 0.4017042941031936),
    (0.5, 3.0, 0.3, 0.6079824328879722),
    (0.5, 3.0, 1.7, 3.1358452872135243),
    (0.5, 3.0, 5.0, 230415677.67838007),
    (0.6, 0.5, -50.0, -0.001775589657375684),
    (0.6, 0.5, -30.0, -0.0028484108903644285),
    (0.6, 0.5, -17.0, -0.004636683490668387),
    (0.6, 0.5, -10.0, -0.006746175259660376),
    (0.6, 0.5, -6.5, -0.007954983187912984),
    (0.6, 0.5, -3.0, 0.00045123637755314027),
    (0.6, 0.5, -1.2, 0.07593603644423466),
    (0.6, 0.5, -0.4, 0.27640544929306354),
    (0.6, 0.5, 0.3, 1.0070088572185873),
    (0.6, 0.5, 1.7, 29.296666130584484),
    (0.6, 0.5, 5.0, 14247793.021390075),
    (0.6, 1.0, -50.0, 0.009083744773103454),
    (0.6, 1.0, -30.0, 0.015211431482801458),
    (0.6, 1.0, -17.0, 0.02707356867094762),
    (0.6, 1.0, -10.0, 0.04658965442680428),
    (0.6, 1.0, -6.5, 0.07259465270813212),
    (0.6, 1.0, -3.0, 0.1597034802650912),
    (0.6, 1.0, -1.2, 0.36221328826316007),
    (0.6, 1.0, -0.4, 0.666514592658689),
    (0.6, 1.0, 0.3, 1.4367259569857198),
    (0.6, 1.0, 1.7, 18.571129852564546),
    (0.6, 1.0, 5.0, 3726255.100230058),
    (0.6, 1.3, -50.0, 0.01536334628542077),
    (0.6, 1.3, -30.0, 0.025552088713300922),
    (0.6, 1.3, -17.0, 0.04489459913646912),
    (0.6, 1.3, -10.0, 0.07569937227389834),
    (0.6, 1.3, -6.5, 0.11498898799840819),
    (0.6, 1.3, -3.0, 0.2353690917743991),
    (0.6, 1.3, -1.2, 0.47693529901864884),
    (0.6, 1.3, -0.4, 0.7947315792202418),
    (0.6, 1.3, 0.3, 1.5084140333987228),
    (0.6, 1.3, 1.7, 13.944741274602528),
    (0.6, 1.3, 5.0, 1666431.821724202),
    (0.6, 2.0, -50.0, 0.022199420699167523),
    (0.6, 2.0, -30.0, 0.0366227073831721),
    (0.6, 2.0, -17.0, 0.06337310946756256),
    (0.6, 2.0, -10.0, 0.10436089819291366),
    (0.6, 2.0, -6.5, 0.15400143382171105),
    (0.6, 2.0, -3.0, 0.29103887580626703),
    (0.6, 2.0, -1.2, 0.5210432875108417),
    (0.6, 2.0, -0.4, 0.7747368803924503),
    (0.6, 2.0, 0.3, 1.2536400101160448),
    (0.6, 2.0, 1.7, 6.772042830881689),
    (0.6, 2.0, 5.0, 254872.00823911763),
    (0.6, 0.6, -50.0, 0.00010979389735394112),
    (0.6, 0.6, -30.0, 0.00030776027117107536),
    (0.6, 0.6, -17.0, 0.0009735456504100445),
    (0.6, 0.6, -10.0, 0.0028711417613393082),
    (0.6, 0.6, -6.5, 0.00690836597461071),
    (0.6, 0.6, -3.0, 0.03169392656155703),
    (0.6, 0.6, -1.2, 0.13721293860099998),
    (0.6, 0.6, -0.4, 0.3666139395202073),
    (0.6, 0.6, 0.3, 1.121420526960312),
    (0.6, 0.6, 1.7, 26.787762018054924),
    (0.6, 0.6, 5.0, 10895636.260188747),
    (0.6, 1.6, -50.0, 0.01981832510453793),
    (0.6, 1.6, -30.0, 0.03282628561723995),
    (0.6, 1.6, -17.0, 0.05723096654876779),
    (0.6, 1.6, -10.0, 0.09534103455731957),
    (0.6, 1.6, -6.5, 0.14267774573721045),
    (0.6, 1.6, -3.0, 0.28009883991163625),
    (0.6, 1.6, -1.2, 0.5314889264473667),
    (0.6, 1.6, -0.4, 0.8337135183532777),
    (0.6, 1.6, 0.3, 1.4557531899523994),
    (0.6, 1.6, 1.7, 10.335958736802672),
    (0.6, 1.6, 5.0, 745250.8200460115),
    (0.6, 2.6, -50.0, 0.01955601158601665),
    (0.6, 2.6, -30.0, 0.03211257642056093),
    (0.6, 2.6, -17.0, 0.05509569944308455),
    (0.6, 2.6, -10.0, 0.08956391018070863),
    (0.6, 2.6, -6.5, 0.1301536255658906),
    (0.6, 2.6, -3.0, 0.23632037473124431),
    (0.6, 2.6, -1.2, 0.39913059374096527),
    (0.6, 2.6, -0.4, 0.5631577990188742),
    (0.6, 2.6, 0.3, 0.8454667003868159),
    (0.6, 2.6, 1.7, 3.395319312283346),
    (0.6, 2.6, 5.0, 50974.20164782351),
    (0.6, 2.2, -50.0, 0.021987132579311685),
    (0.6, 2.2, -30.0, 0.036211622281762744),
    (0.6, 2.2, -17.0, 0.06246729338360908),
    (0.6, 2.2, -10.0, 0.10238339195128027),
    (0.6, 2.2, -6.5, 0.1502303397435249),
    (0.6, 2.2, -3.0, 0.27969203805282866),
    (0.6, 2.2, -1.2, 0.48973835635229634),
    (0.6, 2.2, -0.4, 0.7136535892921113),
    (0.6, 2.2, 0.3, 1.1219274529409242),
    (0.6, 2.2, 1.7, 5.421637519254441),
    (0.6, 2.2, 5.0, 149049.94017421143),
    (0.6, 3.2, -50.0, 0.013598566694156194),
    (0.6, 3.2, -30.0, 0.02224572566244218),
    (0.6, 3.2, -17.0, 0.03790521452063187),
    (0.6, 3.2, -10.0, 0.06099204361131177),
    (0.6, 3.2, -6.5, 0.08758934165045165),
    (0.6, 3.2, -3.0, 0.15438799052086066),
    (0.6, 3.2, -1.2, 0.2502947937940509),
    (0.6, 3.2, -0.4, 0.34081636818738037),
    (0.6, 3.2, 0.3, 0.4866078469766316),
    (0.6, 3.2, 1.7, 1.585785274111482),
    (0.6, 3.2, 5.0, 10194.70043269544),
    (0.7, 0.5, -50.0, -0.0033943345213484372),
    (0.7, 0.5, -30.0, -0.005604256745343751),
    (0.7, 0.5, -17.0, -0.009681631332822864),
    (0.7, 0.5, -10.0, -0.015736128789346788),
    (0.7, 0.5, -6.5, -0.022302660085400394),
    (0.7, 0.5, -3.0, -0.028803149722604608),
    (0.7, 0.5, -1.2, 0.03929229589115051),
    (0.7, 0.5, -0.4, 0.2581996344448551),
    (0.7, 0.5, 0.3, 1.0068670244375755),
    (0.7, 0.5, 1.7, 17.72989181626154),
    (0.7, 0.5, 5.0, 96033.31123477522),
    (0.7, 1.0, -50.0, 0.006793665670383094),
    (0.7, 1.0, -30.0, 0.011444251527526973),
    (0.7, 1.0, -17.0, 0.020608920742512603),
    (0.7, 1.0, -10.0, 0.03617326554230916),
    (0.7, 1.0, -6.5, 0.05788401634115504),
    (0.7, 1.0, -3.0, 0.13789710966502708),
    (0.7, 1.0, -1.2, 0.34575789081981145),
    (0.7, 1.0, -0.4, 0.664150023185581),
    (0.7, 1.0, 0.3, 1.4168633258774752),
    (0.7, 1.0, 1.7, 11.940193334231418),
    (0.7, 1.0, 5.0, 30419.81980204951),
    (0.7, 1.3, -50.0, 0.013466067403204607),
    (0.7, 1.3, -30.0, 0.02248048027810686),
    (0.7, 1.3, -17.0, 0.03978326931531592),
    (0.7, 1.3, -10.0, 0.0678661760364786),
    (0.7, 1.3, -6.5, 0.10462973256341822),
    (0.7, 1.3, -3.0, 0.22302362942490547),
    (0.7, 1.3, -1.2, 0.4730644065816874),
    (0.7, 1.3, -0.4, 0.7996088663094865),
    (0.7, 1.3, 0.3, 1.4829040531200317),
    (0.7, 1.3, 1.7, 9.262353093916547),
    (0.7, 1.3, 5.0, 15261.428614429744),
    (0.7, 2.0, -50.0, 0.022015528822881946),
    (0.7, 2.0, -30.0, 0.036392067608973164),
    (0.7, 2.0, -17.0, 0.06320348466070505),
    (0.7, 2.0, -10.0, 0.10463763325108233),
    (0.7, 2.0, -6.5, 0.155325042459059),
    (0.7, 2.0, -3.0, 0.29707295970746544),
    (0.7, 2.0, -1.2, 0.5343150849713454),
    (0.7, 2.0, -0.4, 0.7865841055945384),
    (0.7, 2.0, 0.3, 1.2288718152424332),
    (0.7, 2.0, 1.7, 4.793006226687791),
    (0.7, 2.0, 5.0, 3052.0628743842394),
    (0.7, 0.7, -50.0, 9.663624446241807e-05),
    (0.7, 0.7, -30.0, 0.00027414282008645453),
    (0.7, 0.7, -17.0, 0.0008880013454793874),
    (0.7, 0.7, -10.0, 0.0027247024931022997),
    (0.7, 0.7, -6.5, 0.006900612178593624),
    (0.7, 0.7, -3.0, 0.035901729730841235),
    (0.7, 0.7, -1.2, 0.16850293294052535),
    (0.7, 0.7, -0.4, 0.44083406620108356),
    (0.7, 0.7, 0.3, 1.2133982787190702),
    (0.7, 0.7, 1.7, 15.188046516674252),
    (0.7, 0.7, 5.0, 60633.97993353259),
    (0.7, 1.7, -50.0, 0.019864126686592338),
    (0.7, 1.7, -30.0, 0.032951858282415765),
    (0.7, 1.7, -17.0, 0.057611239956322786),
    (0.7, 1.7, -10.0, 0.09638267344576909),
    (0.7, 1.7, -6.5, 0.14494092056289923),
    (0.7, 1.7, -3.0, 0.2873676301116576),
    (0.7, 1.7, -1.2, 0.5452017576501571),
    (0.7, 1.7, -0.4, 0.8396249420360474),
    (0.7, 1.7, 0.3, 1.3895444195915843),
    (0.7, 1.7, 1.7, 6.435407843665541),
    (0.7, 1.7, 5.0, 6083.763960409902),
    (0.7, 2.7, -50.0, 0.01955968942354236),
    (0.7, 2.7, -30.0, 0.03212026441303423),
    (0.7, 2.7, -17.0, 0.055105677372899696),
    (0.7, 2.7, -10.0, 0.08953623667489176),
    (0.7, 2.7, -6.5, 0.12994999346783706),
    (0.7, 2.7, -3.0, 0.23430901343084481),
    (0.7, 2.7, -1.2, 0.3880707625238788),
    (0.7, 2.7, -0.4, 0.533539736013654),
    (0.7, 2.7, 0.3, 0.7629060508081102),
    (0.7, 2.7, 1.7, 2.231180133345759),
    (0.7, 2.7, 5.0, 610.2125748768476),
    (0.7, 2.4, -50.0, 0.021613665576741468),
    (0.7, 2.4, -30.0, 0.035586518241375),
    (0.7, 2.4, -17.0, 0.061349186209843705),
    (0.7, 2.4, -10.0, 0.10041647320778967),
    (0.7, 2.4, -6.5, 0.1470163823016564),
    (0.7, 2.4, -3.0, 0.271059925137336),
    (0.7, 2.4, -1.2, 0.4627880398945905),
    (0.7, 2.4, -0.4, 0.6523061587190458),
    (0.7, 2.4, 0.3, 0.9633233802263954),
    (0.7, 2.4, 1.7, 3.138153198906985),
    (0.7, 2.4, 5.0, 1216.5326826008757),
    (0.7, 3.4, -50.0, 0.01255642274710169),
    (0.7, 3.4, -30.0, 0.020508685412186423),
    (0.7, 3.4, -17.0, 0.03483971467092513),
    (0.7, 3.4, -10.0, 0.055784459010373516),
    (0.7, 3.4, -6.5, 0.07960474358627535),
    (0.7, 3.4, -3.0, 0.13769060444926068),
    (0.7, 3.4, -1.2, 0.21609172021229006),
    (0.7, 3.4, -0.4, 0.284602726912432),
    (0.7, 3.4, 0.3, 0.3850840800982784),
    (0.7, 3.4, 1.7, 0.9316466509218428),
    (0.7, 3.4, 5.0, 121.91303881001384),
    (0.9, 0.5, -50.0, -0.00549595414612795),
    (0.9, 0.5, -30.0, -0.009304837283924557),
    (0.9, 0.5, -17.0, -0.016939251293476534),
    (0.9, 0.5, -10.0, -0.030347874573228822),
    (0.9, 0.5, -6.5, -0.049648331449970544),
    (0.9, 0.5, -3.0, -0.10025244677360001),
    (0.9, 0.5, -1.2, -0.04266178321166575),
    (0.9, 0.5, -0.4, 0.22746834066738245),
    (0.9, 0.5, 0.3, 0.9918842546217719),
    (0.9, 0.5, 1.7, 9.156852768756602),
    (0.9, 0.5, 5.0, 1073.4144961144846),
    (0.9, 1.0, -50.0, 0.002175353076856976),
    (0.9, 1.0, -30.0, 0.003713707698459852),
    (0.9, 1.0, -17.0, 0.006883897002567916),
    (0.9, 1.0, -10.0, 0.0128206060511021),
    (0.9, 1.0, -6.5, 0.022874006683302958),
    (0.9, 1.0, -3.0, 0.08388835403377326),
    (0.9, 1.0, -1.2, 0.31439249318454715),
    (0.9, 1.0, -0.4, 0.6659237562729308),
    (0.9, 1.0, 0.3, 1.3727385680911128),
    (0.9, 1.0, 1.7, 6.709638684567507),
    (0.9, 1.0, 5.0, 438.95181466448264),
    (0.9, 1.3, -50.0, 0.00913244562624274),
    (0.9, 1.3, -30.0, 0.015355755959592881),
    (0.9, 1.3, -17.0, 0.027581108312801302),
    (0.9, 1.3, -10.0, 0.048363085503658323),
    (0.9, 1.3, -6.5, 0.07782798457843679),
    (0.9, 1.3, -3.0, 0.19191688252768901),
    (0.9, 1.3, -1.2, 0.4695504374812136),
    (0.9, 1.3, -0.4, 0.8144686971940243),
    (0.9, 1.3, 0.3, 1.432399170559599),
    (0.9, 1.3, 1.7, 5.443995684097005),
    (0.9, 1.3, 5.0, 256.62890086884073),
    (0.9, 2.0, -50.0, 0.02093366539961178),
    (0.9, 2.0, -30.0, 0.03478662367075551),
    (0.9, 2.0, -17.0, 0.06102415949241365),
    (0.9, 2.0, -10.0, 0.10264335131060806),
    (0.9, 2.0, -6.5, 0.15532151869729433),
    (0.9, 2.0, -3.0, 0.3095766951912586),
    (0.9, 2.0, -1.2, 0.5647518095556043),
    (0.9, 2.0, -0.4, 0.8114246272083336),
    (0.9, 2.0, 0.3, 1.1852346151051583),
    (0.9, 2.0, 1.7, 3.07088331915423),
    (0.9, 2.0, 5.0, 73.19993580581463),
    (0.9, 0.9, -50.0, 4.053624958092219e-05),
    (0.9, 0.9, -30.0, 0.00011825044794307207),
    (0.9, 0.9, -17.0, 0.0004078279175165684),
    (0.9, 0.9, -10.0, 0.0014346523622941285),
    (0.9, 0.9, -6.5, 0.004649723995615897),
    (0.9, 0.9, -3.0, 0.044151271783037724),
    (0.9, 0.9, -1.2, 0.2491628880927357),
    (0.9, 0.9, -0.4, 0.5946631778724),
    (0.9, 0.9, 0.3, 1.3241629419076748),
    (0.9, 0.9, 1.7, 7.163916083475422),
    (0.9, 0.9, 5.0, 524.9259209272324),
    (0.9, 1.9, -50.0, 0.01995649293846286),
    (0.9, 1.9, -30.0, 0.033209543076718),
    (0.9, 1.9, -17.0, 0.05841859429396659),
    (0.9, 1.9, -10.0, 0.09871793939488978),
    (0.9, 1.9, -6.5, 0.15032707589487646),
    (0.9, 1.9, -3.0, 0.3053705486554089),
    (0.9, 1.9, -1.2, 0.5713395890128774),
    (0.9, 1.9, -0.4, 0.8351906093176732),
    (0.9, 1.9, 0.3, 1.2424618936370424),
    (0.9, 1.9, 1.7, 3.3586109909220627),
    (0.9, 1.9, 5.0, 87.59036293289654),
    (0.9, 2.9, -50.0, 0.019581326692007767),
    (0.9, 2.9, -30.0, 0.03217377921097482),
    (0.9, 2.9, -17.0, 0.05523387297103449),
    (0.9, 2.9, -10.0, 0.0897356648689392),
    (0.9, 2.9, -6.5, 0.12995053558503164),
    (0.9, 2.9, -3.0, 0.23014110160291382),
    (0.9, 2.9, -1.2, 0.3627068253703297),
    (0.9, 2.9, -0.4, 0.4714384319791658),
    (0.9, 2.9, 0.3, 0.6174487170171944),
    (0.9, 2.9, 1.7, 1.2181666583260178),
    (0.9, 2.9, 5.0, 14.439987161162929),
    (0.9, 2.8, -50.0, 0.02039595282818347),
    (0.9, 2.8, -30.0, 0.033551486375697284),
    (0.9, 2.8, -17.0, 0.057725620003157056),
    (0.9, 2.8, -10.0, 0.09410361949527467),
    (0.9, 2.8, -6.5, 0.13683493206965539),
    (0.9, 2.8, -3.0, 0.24479452856407585),
    (0.9, 2.8, -1.2, 0.39034545444563257),
    (0.9, 2.8, -0.4, 0.5114088125749082),
    (0.9, 2.8, 0.3, 0.675692530964687),
    (0.9, 2.8, 1.7, 1.3640334450437805),
    (0.9, 2.8, 5.0, 17.310121759709784),
    (0.9, 3.8, -50.0, 0.010553153827713914),
    (0.9, 3.8, -30.0, 0.01716884129555762),
    (0.9, 3.8, -17.0, 0.028941479123921705),
    (0.9, 3.8, -10.0, 0.045750335320876426),
    (0.9, 3.8, -6.5, 0.06419822807579566),
    (0.9, 3.8, -3.0, 0.10569930549159655),
    (0.9, 3.8, -1.2, 0.15377682725614475),
    (0.9, 3.8, -0.4, 0.1895014652463441),
    (0.9, 3.8, 0.3, 0.2340323297983031),
    (0.9, 3.8, 1.7, 0.3946633177931262),
    (0.9, 3.8, 5.0, 2.7785496286170455),
    (1.2, 0.5, -50.0, -0.0047444464615940965),
    (1.2, 0.5, -30.0, -0.007960358007676588),
    (1.2, 0.5, -17.0, -0.013529245549935775),
    (1.2, 0.5, -10.0, -0.02291238332553364),
    (1.2, 0.5, -6.5, -0.08154903885534041),
    (1.2, 0.5, -3.0, -0.2842242505892804),
    (1.2, 0.5, -1.2, -0.17529986593957111),
    (1.2, 0.5, -0.4, 0.20277270304537345),
    (1.2, 0.5, 0.3, 0.9477899804126717),
    (1.2, 0.5, 1.7, 5.01660990472084),
    (1.2, 0.5, 5.0, 74.62135416835508),
    (1.2, 1.0, -50.0, -0.0035956826952330437),
    (1.2, 1.0, -30.0, -0.006189775580038953),
    (1.2, 1.0, -17.0, -0.01156123369610714),
    (1.2, 1.0, -10.0, -0.026398347125869203),
    (1.2, 1.0, -6.5, -0.0573967988332505),
    (1.2, 1.0, -3.0, -0.035645871490878105),
    (1.2, 1.0, -1.2, 0.2858883510459576),
    (1.2, 1.0, -0.4, 0.6861305671431136),
    (1.2, 1.0, 0.3, 1.304586044926476),
    (1.2, 1.0, 1.7, 4.0004280199728),
    (1.2, 1.0, 5.0, 38.166177578453244),
    (1.2, 1.3, -50.0, 0.0020549171628654822),
    (1.2, 1.3, -30.0, 0.0033585196531788907),
    (1.2, 1.3, -17.0, 0.005615967820018041),
    (1.2, 1.3, -10.0, 0.0061785049486255865),
    (1.2, 1.3, -6.5, 0.009453266150107005),
    (1.2, 1.3, -3.0, 0.1286108112054366),
    (1.2, 1.3, -1.2, 0.4859931841394502),
    (1.2, 1.3, -0.4, 0.8487799781709336),
    (1.2, 1.3, 0.3, 1.3628629346728862),
    (1.2, 1.3, 1.7, 3.395493355996419),
    (1.2, 1.3, 5.0, 25.4842298969372),
    (1.2, 2.0, -50.0, 0.017289781250409204),
    (1.2, 2.0, -30.0, 0.028946756873816964),
    (1.2, 2.0, -17.0, 0.05153636125949783),
    (1.2, 2.0, -10.0, 0.08950268517715261),
    (1.2, 2.0, -6.5, 0.1454005768680732),
    (1.2, 2.0, -3.0, 0.3362286260236536),
    (1.2, 2.0, -1.2, 0.622663213940147),
    (1.2, 2.0, -0.4, 0.849776152901789),
    (1.2, 2.0, 0.3, 1.1330987365494882),
    (1.2, 2.0, 1.7, 2.08634119952764),
    (1.2, 2.0, 5.0, 9.8117419937419),
    (1.2, 1.2, -50.0, -9.037444401548987e-05),
    (1.2, 1.2, -30.0, -0.0002680563776496856),
    (1.2, 1.2, -17.0, -0.0009416332019372669),
    (1.2, 1.2, -10.0, -0.006275650474615392),
    (1.2, 1.2, -6.5, -0.014416598215610157),
    (1.2, 1.2, -3.0, 0.07696099477638607),
    (1.2, 1.2, -1.2, 0.4287570397671515),
    (1.2, 1.2, -0.4, 0.8067683848087924),
    (1.2, 1.2, 0.3, 1.356433817906739),
    (1.2, 1.2, 1.7, 3.5961723607493057),
    (1.2, 1.2, 5.0, 29.163253430449416),
    (1.2, 2.2, -50.0, 0.020071913653904663),
    (1.2, 2.2, -30.0, 0.033539659186001304),
    (1.2, 2.2, -17.0, 0.059503601982123955),
    (1.2, 2.2, -10.0, 0.10263983471258693),
    (1.2, 2.2, -6.5, 0.16267643058973086),
    (1.2, 2.2, -3.0, 0.34521529049695937),
    (1.2, 2.2, -1.2, 0.5950930407950353),
    (1.2, 2.2, -0.4, 0.7846735821422159),
    (1.2, 2.2, 0.3, 1.0152868164215858),
    (1.2, 2.2, 1.7, 1.764957658807529),
    (1.2, 2.2, 5.0, 7.4332355156906464),
    (1.2, 3.2, -50.0, 0.019654204374991813),
    (1.2, 3.2, -30.0, 0.03236844143753943),
    (1.2, 3.2, -17.0, 0.0557919787494413),
    (1.2, 3.2, -10.0, 0.09104973148228472),
    (1.2, 3.2, -6.5, 0.1314768343279887),
    (1.2, 3.2, -3.0, 0.22125712465878208),
    (1.2, 3.2, -1.2, 0.3144473217165441),
    (1.2, 3.2, -0.4, 0.3755596177455273),
    (1.2, 3.2, 0.3, 0.4436624551649609),
    (1.2, 3.2, 1.7, 0.6390242350162588),
    (1.2, 3.2, 5.0, 1.7623483987483795),
    (1.2, 3.4, -50.0, 0.01775063541122751),
    (1.2, 3.4, -30.0, 0.029135467500975967),
    (1.2, 3.4, -17.0, 0.04988824013136214),
    (1.2, 3.4, -10.0, 0.08049638495026934),
    (1.2, 3.4, -6.5, 0.11460419286546915),
    (1.2, 3.4, -3.0, 0.18746279790610698),
    (1.2, 3.4, -1.2, 0.2604255361835374),
    (1.2, 3.4, -0.4, 0.30732525518266063),
    (1.2, 3.4, 0.3, 0.3589437740210192),
    (1.2, 3.4, 1.7, 0.5043258674072054),
    (1.2, 3.4, 5.0, 1.3051263662950736),
    (1.2, 4.4, -50.0, 0.007857858496275436),
    (1.2, 4.4, -30.0, 0.012672622925040806),
    (1.2, 4.4, -17.0, 0.02098559708466602),
    (1.2, 4.4, -10.0, 0.03214973977064789),
    (1.2, 4.4, -6.5, 0.0432415838247346),
    (1.2, 4.4, -3.0, 0.06376333484332718),
    (1.2, 4.4, -1.2, 0.08174983956018297),
    (1.2, 4.4, -0.4, 0.09246877860809087),
    (1.2, 4.4, 0.3, 0.10371775325399064),
    (1.2, 4.4, 1.7, 0.13322182695735005),
    (1.2, 4.4, 5.0, 0.2699602539119231),
    (1.5, 0.5, -50.0, 0.0058060962552030325),
    (1.5, 0.5, -30.0, -0.03207781907214887),
    (1.5, 0.5, -17.0, 0.11400456518025613),
    (1.5, 0.5, -10.0, 0.10530163581091527),
    (1.5, 0.5, -6.5, -0.24955796606613478),
    (1.5, 0.5, -3.0, -0.6139993174687554),
    (1.5, 0.5, -1.2, -0.26777958740806324),
    (1.5, 0.5, -0.4, 0.2097540211312443),
    (1.5, 0.5, 0.3, 0.8924243080804907),
    (1.5, 0.5, 1.7, 3.370545385451609),
    (1.5, 0.5, 5.0, 21.24180370553139),
    (1.5, 1.0, -50.0, -0.004578385105839278),
    (1.5, 1.0, -30.0, -0.014470224834105875),
    (1.5, 1.0, -17.0, 0.02545944893805021),
    (1.5, 1.0, -10.0, -0.10971305425274015),
    (1.5, 1.0, -6.5, -0.26964871896516557),
    (1.5, 1.0, -3.0, -0.17556537379997825),
    (1.5, 1.0, -1.2, 0.30699415064625213),
    (1.5, 1.0, -0.4, 0.7245776832351661),
    (1.5, 1.0, 0.3, 1.2412030890688286),
    (1.5, 1.0, 1.7, 2.8670403832791935),
    (1.5, 1.0, 5.0, 12.457289126443952),
    (1.5, 1.3, -50.0, -0.0034918781237528195),
    (1.5, 1.3, -30.0, -0.005449339174496133),
    (1.5, 1.3, -17.0, -0.0006933524164555933),
    (1.5, 1.3, -10.0, -0.0995214636996565),
    (1.5, 1.3, -6.5, -0.14768194103583002),
    (1.5, 1.3, -3.0, 0.08120244786098355),
    (1.5, 1.3, -1.2, 0.542434035829478),
    (1.5, 1.3, -0.4, 0.8929893571826326),
    (1.5, 1.3, 0.3, 1.3036728806620992),
    (1.5, 1.3, 1.7, 2.5191458724600753),
    (1.5, 1.3, 5.0, 9.01535903081245),
    (1.5, 2.0, -50.0, 0.011167669745851065),
    (1.5, 2.0, -30.0, 0.01987558008733017),
    (1.5, 2.0, -17.0, 0.02648147166867648),
    (1.5, 2.0, -10.0, 0.0458887947736841),
    (1.5, 2.0, -6.5, 0.1251919307098294),
    (1.5, 2.0, -3.0, 0.3927296336721705),
    (1.5, 2.0, -1.2, 0.693307642463183),
    (1.5, 2.0, -0.4, 0.8860889060412799),
    (1.5, 2.0, 0.3, 1.094115748442448),
    (1.5, 2.0, 1.7, 1.6507975305316782),
    (1.5, 2.0, 5.0, 4.135522824396726),
    (1.5, 1.5, -50.0, -0.0002833110656227309),
    (1.5, 1.5, -30.0, 0.0013125597381136679),
    (1.5, 1.5, -17.0, -0.001979259980293628),
    (1.5, 1.5, -10.0, -0.06338633971250038),
    (1.5, 1.5, -6.5, -0.05577058926873215),
    (1.5, 1.5, -3.0, 0.2149766677682693),
    (1.5, 1.5, -1.2, 0.6388274483742318),
    (1.5, 1.5, -0.4, 0.9416147434011033),
    (1.5, 1.5, 0.3, 1.2863460138053058),
    (1.5, 1.5, 1.7, 2.272617065838513),
    (1.5, 1.5, 5.0, 7.246842437562148),
    (1.5, 2.5, -50.0, 0.020091567702116786),
    (1.5, 2.5, -30.0, 0.033815674161136865),
    (1.5, 2.5, -17.0, 0.057325914768349986),
    (1.5, 2.5, -10.0, 0.11097130542527402),
    (1.5, 2.5, -6.5, 0.195330572148487),
    (1.5, 2.5, -3.0, 0.3918551245999927),
    (1.5, 2.5, -1.2, 0.5775048744614566),
    (1.5, 2.5, -0.4, 0.6885557919120847),
    (1.5, 2.5, 0.3, 0.8040102968960955),
    (1.5, 2.5, 1.7, 1.0982590489877608),
    (1.5, 2.5, 5.0, 2.29145782528879),
    (1.5, 3.5, -50.0, 0.01977664660508298),
    (1.5, 3.5, -30.0, 0.032670813997088995),
    (1.5, 3.5, -17.0, 0.0572657957841955),
    (1.5, 3.5, -10.0, 0.09541112052263159),
    (1.5, 3.5, -6.5, 0.1345858568138724),
    (1.5, 3.5, -3.0, 0.2024234554426098),
    (1.5, 3.5, -1.2, 0.25557696461401425),
    (1.5, 3.5, -0.4, 0.28477773489680025),
    (1.5, 3.5, 0.3, 0.3137191614748266),
    (1.5, 3.5, 1.7, 0.3828220767833402),
    (1.5, 3.5, 5.0, 0.6271045648793453),
    (1.5, 4.0, -50.0, 0.014643224207231166),
    (1.5, 4.0, -30.0, 0.02394790346341794),
    (1.5, 4.0, -17.0, 0.04087805078207794),
    (1.5, 4.0, -10.0, 0.0641281472638401),
    (1.5, 4.0, -6.5, 0.0856803393715674),
    (1.5, 4.0, -3.0, 0.12013255115456077),
    (1.5, 4.0, -1.2, 0.14562325300184875),
    (1.5, 4.0, -0.4, 0.1592424653789758),
    (1.5, 4.0, 0.3, 0.17252506277473484),
    (1.5, 4.0, 1.7, 0.20353310054357987),
    (1.5, 4.0, 5.0, 0.307841009445023),
    (1.5, 5.0, -50.0, 0.005622489292407741),
    (1.5, 5.0, -30.0, 0.0089410099076127),
    (1.5, 5.0, -17.0, 0.014331489143604383),
    (1.5, 5.0, -10.0, 0.020548999070283843),
    (1.5, 5.0, -6.5, 0.025586962217168864),
    (1.5, 5.0, -3.0, 0.0328258852609534),
    (1.5, 5.0, -1.2, 0.037770122176213165),
    (1.5, 5.0, -0.4, 0.040308440821674396),
    (1.5, 5.0, 0.3, 0.04272683416452193),
    (1.5, 5.0, 1.7, 0.048188803269335376),
    (1.5, 5.0, 5.0, 0.06524069073077504),
    (1.8, 0.5, -50.0, -0.7066685107511456),
    (1.8, 0.5, -30.0, 0.41579239809895513),
    (1.8, 0.5, -17.0, 0.8508021487408259),
    (1.8, 0.5, -10.0, -0.31009353207987234),
    (1.8, 0.5, -6.5, -0.9604315447983358),
    (1.8, 0.5, -3.0, -0.9253736898438966),
    (1.8, 0.5, -1.2, -0.26930471420298674),
    (1.8, 0.5, -0.4, 0.24420873414928637),
    (1.8, 0.5, 0.3, 0.8348027993893037),
    (1.8, 0.5, 1.7, 2.4971400009228635),
    (1.8, 0.5, 5.0, 10.007809890975091),
    (1.8, 1.0, -50.0, -0.17643515585736697),
    (1.8, 1.0, -30.0, 0.33781129925194386),
    (1.8, 1.0, -17.0, 0.011510078307936985),
    (1.8, 1.0, -10.0, -0.5605749125451257),
    (1.8, 1.0, -6.5, -0.6531230533371168),
    (1.8, 1.0, -3.0, -0.21891138756102455),
    (1.8, 1.0, -1.2, 0.38492451948597955),
    (1.8, 1.0, -0.4, 0.7731009946357256),
    (1.8, 1.0, 0.3, 1.1857842117098614),
    (1.8, 1.0, 1.7, 2.251540668133557),
    (1.8, 1.0, 5.0, 6.461663638537767),
    (1.8, 1.3, -50.0, -0.039754120320130364),
    (1.8, 1.3, -30.0, 0.1826653439307858),
    (1.8, 1.3, -17.0, -0.1540336974488666),
    (1.8, 1.3, -10.0, -0.42586569010952563),
    (1.8, 1.3, -6.5, -0.35113579675108686),
    (1.8, 1.3, -3.0, 0.12473357221113597),
    (1.8, 1.3, -1.2, 0.6338367457151154),
    (1.8, 1.3, -0.4, 0.9398161075426842),
    (1.8, 1.3, 0.3, 1.255174386606895),
    (1.8, 1.3, 1.7, 2.0401399558054547),
    (1.8, 1.3, 5.0, 4.950649994620452),
    (1.8, 2.0, -50.0, 0.026486761460130657),
    (1.8, 2.0, -30.0, 0.009959313938616474),
    (1.8, 2.0, -17.0, -0.08699061163964175),
    (1.8, 2.0, -10.0, -0.01764501311274883),
    (1.8, 2.0, -6.5, 0.14935559838567533),
    (1.8, 2.0, -3.0, 0.49084767819079234),
    (1.8, 2.0, -1.2, 0.7666697663187177),
    (1.8, 2.0, -0.4, 0.9173462289888749),
    (1.8, 2.0, 0.3, 1.0653887858006816),
    (1.8, 2.0, 1.7, 1.4124279142655674),
    (1.8, 2.0, 5.0, 2.5633932836787254),
    (1.8, 1.8, -50.0, 0.023734975957787473),
    (1.8, 1.8, -30.0, 0.030514251748519378),
    (1.8, 1.8, -17.0, -0.1339653273216898),
    (1.8, 1.8, -10.0, -0.11736717296966807),
    (1.8, 1.8, -6.5, 0.05039369640296151),
    (1.8, 1.8, -3.0, 0.4445723667997892),
    (1.8, 1.8, -1.2, 0.781525308016982),
    (1.8, 1.8, -0.4, 0.9695855307757293),
    (1.8, 1.8, 0.3, 1.1564249041040995),
    (1.8, 1.8, 1.7, 1.600717470913152),
    (1.8, 1.8, 5.0, 3.115367967747453),
    (1.8, 2.8, -50.0, 0.02352870311714734),
    (1.8, 2.8, -30.0, 0.022072956691601864),
    (1.8, 2.8, -17.0, 0.05814646598188604),
    (1.8, 2.8, -10.0, 0.15605749125451257),
    (1.8, 2.8, -6.5, 0.25432662359032565),
    (1.8, 2.8, -3.0, 0.40630379585367493),
    (1.8, 2.8, -1.2, 0.5125629004283505),
    (1.8, 2.8, -0.4, 0.567247513410686),
    (1.8, 2.8, 0.3, 0.619280705699538),
    (1.8, 2.8, 1.7, 0.7362003930197394),
    (1.8, 2.8, 5.0, 1.0923327277075536),
    (1.8, 3.8, -50.0, 0.01947026477079739),
    (1.8, 3.8, -30.0, 0.03300135620204612),
    (1.8, 3.8, -17.0, 0.06394062421409659),
    (1.8, 3.8, -10.0, 0.1017645013112749),
    (1.8, 3.8, -6.5, 0.1308683694791269),
    (1.8, 3.8, -3.0, 0.16971744060306926),
    (1.8, 3.8, -1.2, 0.19444186140106856),
    (1.8, 3.8, -0.4, 0.20663442752781283),
    (1.8, 3.8, 0.3, 0.2179626193356056),
    (1.8, 3.8, 1.7, 0.24260465545033383),
    (1.8, 3.8, 5.0, 0.3126786567357452),
    (1.8, 4.6, -50.0, 0.011459106760221884),
    (1.8, 4.6, -30.0, 0.01914703614788799),
    (1.8, 4.6, -17.0, 0.03166691618507973),
    (1.8, 4.6, -10.0, 0.04404265498737289),
    (1.8, 4.6, -6.5, 0.05263960269814089),
    (1.8, 4.6, -3.0, 0.06339341509152217),
    (1.8, 4.6, -1.2, 0.06993428391657577),
    (1.8, 4.6, -0.4, 0.0730913192938884),
    (1.8, 4.6, 0.3, 0.07598888190432208),
    (1.8, 4.6, 1.7, 0.08218608934794001),
    (1.8, 4.6, 5.0, 0.0991697373158625),
    (1.8, 5.6, -50.0, 0.0038711949983572065),
    (1.8, 5.6, -30.0, 0.006000955282887053),
    (1.8, 5.6, -17.0, 0.008769964145562418),
    (1.8, 5.6, -10.0, 0.011126551337738278),
    (1.8, 5.6, -6.5, 0.01264025310915858),
    (1.8, 5.6, -3.0, 0.014437524695196133),
    (1.8, 5.6, -1.2, 0.015490127739657578),
    (1.8, 5.6, -0.4, 0.015988967902112065),
    (1.8, 5.6, 0.3, 0.0164420154898265),
    (1.8, 5.6, 1.7, 0.017396847506868353),
    (1.8, 5.6, 5.0, 0.019929728409417518),
];

#[test]
fn mittag_leffler_matches_reference() {
    for &(alpha, beta, z, want) in MITTAG_LEFFLER {
        let got = MittagLeffler::new(alpha, beta).unwrap().eval(z).unwrap();
        // relative, with an absolute floor of 1e-14 for tiny values
        let err = (got - want).abs() / want.abs().max(1e-3);
        assert!(err <= 1e-11, "E_({alpha},{beta})({z}) = {got:e}, want {want:e}");
    }
}

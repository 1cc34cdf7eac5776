"""erfc and erfcx at fixed points, 30 significant digits (mpmath, 40-digit working precision).

Generated by tools/make_erfc_reference.py; do not edit.
"""

# (z, erfc(z), erfcx(z))
ERFC_TABLE = [
    (-8.0, "1.99999999999999999999999999999", "12470298161623233765818477417.8"),
    (-7.157894736842105, "1.99999999999999999999999562252", "35670260107519263395594.1390316"),
    (-6.315789473684211, "1.99999999999999999958115190466", "421393662267279353.514152930905"),
    (-5.473684210526316, "1.99999999999999013298545319849", "20559947790198.1512368539534702"),
    (-4.631578947368421, "1.9999999999424790047619803557", "4142936721.11279427919395117127"),
    (-3.789473684210526, "1.99999991637405451903999937813", "3447838.05574402846922987958173"),
    (-2.9473684210526314, "1.99996929968069124873395523388", "11850.3471287633628241226692102"),
    (-2.1052631578947367, "1.99709192830300180497481980777", "167.976661576300114751025907572"),
    (-1.263157894736842, "1.92596144355217712051008287194", "9.49716336905217979181509651616"),
    (-0.42105263157894735, "1.44846286285978159136446386988", "1.72942367663504104286265804319"),
    (0.42105263157894735, "0.551537137140218408635536130122", "0.658519737006290064635548718449"),
    (1.263157894736842, "0.0740385564478228794899171280634", "0.365093635985198263763277670604"),
    (2.1052631578947367, "0.00290807169699819502518019222619", "0.244599744440090897998523612253"),
    (2.9473684210526314, "0.0000307003193087512660447661233391", "0.181907512695651705260533228303"),
    (3.789473684210526, "0.0000000836259454809600006218693326657", "0.144164364666355276083433686739"),
    (4.631578947368421, "5.7520995238019644304812291277e-11", "0.119152921706699776774121843739"),
    (5.473684210526316, "9.86701454680150842909262163627e-15", "0.101432651963682843384673167142"),
    (6.315789473684211, "4.18848095340380989152768142341e-19", "0.088249966414578864837220948331"),
    (7.157894736842105, "4.37747823568832554504583629216e-24", "0.0780728936410035432939404141525"),
    (8.0, "1.12242971729829270799678884432e-29", "0.069985166200880927722752249442"),
    (0.0, "1.0", "1.0"),
    (1.0, "0.157299207050285130658779364917", "0.427583576155807004410750344491"),
    (0.5, "0.479500122186953462317253346108", "0.615690344192925874870793422684"),
    (2.0, "0.00467773498104726583793074363275", "0.255395676310505743865088580909"),
]

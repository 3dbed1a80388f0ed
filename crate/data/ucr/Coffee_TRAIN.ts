#Coffee bean spectrographs (Robusta vs Arabica), UCR archive.
@problemName Coffee
@timeStamps false
@missing false
@univariate true
@equalLength true
@seriesLength 286
@classLabel true 0 1
@data
-5.1841899e-01,-4.8588363e-01,-5.0500747e-01,-5.6018294e-01,-6.3629941e-01,-7.5322902e-01,-8.2722915e-01,-8.5976467e-01,-9.0632072e-01,-9.2379648e-01,-9.3321222e-01,-9.3442926e-01,-9.2078716e-01,-9.3657191e-01,-9.5599685e-01,-9.5934101e-01,-9.6940599e-01,-9.8240550e-01,-9.7659952e-01,-9.6252576e-01,-9.7031893e-01,-9.8199237e-01,-9.8746160e-01,-1.0152202e+00,-1.0480611e+00,-1.0592421e+00,-1.0498854e+00,-1.0467321e+00,-1.0643986e+00,-1.0877935e+00,-1.0993351e+00,-1.0850813e+00,-1.0641912e+00,-1.0545229e+00,-1.0445030e+00,-1.0236367e+00,-9.9421712e-01,-9.6371982e-01,-9.2237217e-01,-8.6616903e-01,-8.1351574e-01,-7.7266759e-01,-7.2343976e-01,-6.6424331e-01,-6.3424598e-01,-6.2804510e-01,-6.0469363e-01,-5.6829781e-01,-5.3778323e-01,-5.0569966e-01,-4.6122590e-01,-3.8892741e-01,-2.9296669e-01,-2.0056328e-01,-9.0999931e-02,8.4190471e-03,8.2658143e-02,2.2029375e-01,3.4217234e-01,4.2883427e-01,5.5487916e-01,5.4987503e-01,5.1045674e-01,6.0485004e-01,6.6287240e-01,6.4908008e-01,7.0823327e-01,7.9018805e-01,8.6140673e-01,9.0662450e-01,9.9179382e-01,1.0739758e+00,1.0479147e+00,1.0612876e+00,1.0357806e+00,9.6001308e-01,8.9669581e-01,7.8296885e-01,7.3898713e-01,7.3807388e-01,7.8617673e-01,7.9967050e-01,7.5924260e-01,7.0871026e-01,6.3221283e-01,6.3678196e-01,6.3336569e-01,6.3591783e-01,6.6037969e-01,6.8449957e-01,6.7970700e-01,6.3532880e-01,6.0739885e-01,6.0318089e-01,5.1534708e-01,4.4636312e-01,4.4976719e-01,4.2765431e-01,3.6126765e-01,3.1869552e-01,2.9465455e-01,2.3049152e-01,2.1593633e-01,2.0237126e-01,2.1164516e-01,2.3750170e-01,2.0308579e-01,1.8274348e-01,2.0487522e-01,2.3673899e-01,3.1383021e-01,3.8322175e-01,4.0506666e-01,4.3961046e-01,4.8577001e-01,5.3359792e-01,5.6159823e-01,6.0313034e-01,6.4741013e-01,6.4071562e-01,6.7863259e-01,7.2382960e-01,7.1367778e-01,7.3546405e-01,6.9066321e-01,6.3241900e-01,5.6722941e-01,5.1244061e-01,4.7484660e-01,4.3247746e-01,4.0443785e-01,3.3903466e-01,2.6204866e-01,2.2305982e-01,2.4140717e-01,2.4035557e-01,2.0729773e-01,2.1281292e-01,2.4948685e-01,2.5620973e-01,2.6658356e-01,3.3899868e-01,4.4332037e-01,5.4020464e-01,6.3521042e-01,7.0826639e-01,7.6582523e-01,8.7434538e-01,8.8325623e-01,8.4631813e-01,9.8076820e-01,1.0468980e+00,1.0402390e+00,1.0373778e+00,1.0324659e+00,1.0328770e+00,1.0432058e+00,1.0251688e+00,9.5724210e-01,9.8233720e-01,9.3526851e-01,8.4303862e-01,7.6011212e-01,7.2102534e-01,6.7473410e-01,6.1629687e-01,6.0648544e-01,5.9670174e-01,4.8259033e-01,3.2463397e-01,2.0111206e-01,1.0096920e-01,-3.4165135e-02,-1.5944208e-01,-2.4965229e-01,-3.1928105e-01,-3.4077004e-01,-3.5730736e-01,-3.5495236e-01,-3.4208185e-01,-3.4209500e-01,-2.8669973e-01,-2.2090321e-01,-1.8784982e-01,-1.4036721e-01,-8.5618493e-02,-9.3161920e-02,-1.1884304e-01,-1.4803440e-01,-1.3473365e-01,-3.8413047e-02,3.7040077e-02,1.3759084e-01,2.6453012e-01,3.9180314e-01,5.0227737e-01,5.5452482e-01,6.2484657e-01,7.1932402e-01,9.0269860e-01,1.0301155e+00,1.1143873e+00,1.2580638e+00,1.3982630e+00,1.4946701e+00,1.5866569e+00,1.6391971e+00,1.7010214e+00,1.7720688e+00,1.8022991e+00,1.6637242e+00,1.5481869e+00,1.5057579e+00,1.4080080e+00,1.4124569e+00,1.4675140e+00,1.5188524e+00,1.5334850e+00,1.4690250e+00,1.6630346e+00,1.6795213e+00,1.5245938e+00,1.3500752e+00,1.1753579e+00,1.0088755e+00,9.0809890e-01,9.0521381e-01,9.4613043e-01,9.6435243e-01,1.0245697e+00,1.2284163e+00,1.3153384e+00,1.3734245e+00,1.3545781e+00,1.0694367e+00,7.5064171e-01,4.8675030e-01,2.3820768e-01,-1.5332082e-02,-2.4774734e-01,-4.5842687e-01,-6.0725068e-01,-7.7932422e-01,-9.0835007e-01,-1.0187557e+00,-1.0841250e+00,-1.1038269e+00,-1.1002270e+00,-1.0962133e+00,-1.0927827e+00,-1.0827159e+00,-1.0938413e+00,-1.1480360e+00,-1.2375491e+00,-1.3471144e+00,-1.4815614e+00,-1.5935833e+00,-1.6870365e+00,-1.7516247e+00,-1.7943041e+00,-1.8241779e+00,-1.8432856e+00,-1.8566563e+00,-1.8665025e+00,-1.8752712e+00,-1.8818505e+00,-1.8871850e+00,-1.8920667e+00,-1.8968985e+00,-1.9005997e+00,-1.9043497e+00,-1.9077444e+00,-1.9099115e+00,-1.9127192e+00,-1.9163279e+00,-1.9181929e+00,-1.9201246e+00,-1.9223129e+00,-1.9242122e+00,-1.9269965e+00,-1.9287208e+00,-1.9300262e+00,-1.9323014e+00,-1.9336308e+00,-1.9349635e+00,-1.9360067e+00:0
-5.4846169e-01,-5.3368082e-01,-5.1472295e-01,-5.5925554e-01,-6.2680612e-01,-7.2728361e-01,-7.9633935e-01,-8.2955226e-01,-8.6309142e-01,-8.5818148e-01,-8.5428819e-01,-8.5424880e-01,-8.5245819e-01,-8.9271787e-01,-9.2984392e-01,-9.4271557e-01,-9.6331925e-01,-9.7768231e-01,-9.7121953e-01,-9.5016586e-01,-9.5354794e-01,-9.9647607e-01,-1.0082791e+00,-1.0023866e+00,-1.0243972e+00,-1.0403471e+00,-1.0285664e+00,-9.9147207e-01,-9.9760565e-01,-1.0457352e+00,-1.0623889e+00,-1.0516949e+00,-1.0340842e+00,-1.0212878e+00,-1.0140783e+00,-1.0040397e+00,-9.8191267e-01,-9.4186479e-01,-8.8278255e-01,-8.2554537e-01,-7.8309081e-01,-7.2440805e-01,-6.7347183e-01,-6.1660238e-01,-5.4499603e-01,-5.1884157e-01,-4.9441869e-01,-4.8074961e-01,-4.4860289e-01,-4.1588756e-01,-4.3377095e-01,-4.0087449e-01,-3.3471078e-01,-2.6653627e-01,-1.6016155e-01,-6.8833627e-02,3.0156818e-02,1.4947946e-01,2.1055362e-01,2.9476309e-01,3.7865110e-01,4.5044491e-01,5.1002210e-01,5.1633081e-01,5.5047240e-01,6.2427517e-01,5.9903228e-01,6.2397848e-01,7.2704477e-01,7.7313325e-01,8.5044271e-01,9.0173487e-01,9.5264370e-01,9.3172871e-01,8.5569516e-01,8.5475654e-01,7.5876637e-01,6.5699661e-01,6.9353343e-01,6.8148550e-01,7.0163656e-01,7.8303594e-01,7.1807754e-01,6.5028450e-01,6.3171509e-01,5.7755861e-01,5.9502888e-01,6.2554474e-01,6.0776665e-01,5.9599140e-01,6.9369012e-01,8.0348424e-01,7.4384496e-01,6.6727531e-01,6.2878814e-01,6.6019373e-01,6.7702349e-01,5.1682281e-01,4.2013419e-01,4.4012638e-01,3.9959729e-01,3.2809209e-01,3.3811263e-01,3.4277585e-01,3.0797442e-01,3.1023260e-01,2.8920162e-01,2.3976565e-01,2.4655861e-01,3.1859903e-01,3.6170360e-01,4.0853844e-01,4.6171702e-01,4.9528444e-01,5.3167003e-01,6.2291317e-01,7.0981040e-01,7.4347800e-01,7.8735414e-01,8.0619023e-01,8.4085002e-01,8.1481963e-01,7.9008882e-01,8.6378335e-01,8.6399143e-01,8.2181981e-01,7.2045520e-01,6.1783083e-01,5.3526292e-01,4.4349220e-01,4.3105636e-01,4.1940453e-01,3.7485448e-01,3.2759670e-01,2.7558699e-01,2.7100768e-01,3.2311931e-01,3.1305589e-01,3.2346313e-01,3.4660662e-01,3.2270477e-01,3.5272142e-01,4.5215630e-01,5.8207627e-01,6.5530148e-01,7.0517665e-01,8.0273275e-01,8.9645197e-01,8.5627108e-01,8.3106158e-01,1.0438482e+00,1.0867006e+00,9.8125754e-01,9.5997440e-01,9.9511147e-01,1.0686506e+00,1.0660100e+00,1.0361163e+00,9.7937659e-01,9.0127156e-01,8.7886996e-01,9.4101151e-01,9.1181913e-01,7.9411753e-01,7.1782319e-01,7.1163615e-01,7.3657024e-01,6.6985080e-01,5.7164174e-01,4.4857083e-01,2.7045838e-01,1.4539521e-01,-1.4823582e-02,-1.3756049e-01,-2.1753884e-01,-3.2726781e-01,-3.7416681e-01,-3.2535390e-01,-3.1463632e-01,-3.6414759e-01,-3.6873715e-01,-2.2673630e-01,-1.2805979e-01,-9.2605297e-02,-5.8158063e-02,-2.2929661e-02,-5.2162742e-02,-1.3115675e-01,-1.8413749e-01,-1.7842184e-01,-7.3955903e-02,3.0383781e-02,1.1954039e-01,1.4833930e-01,1.7971707e-01,3.3239086e-01,4.4862735e-01,5.8289061e-01,6.6836376e-01,7.6934177e-01,8.7943770e-01,1.0163035e+00,1.1515495e+00,1.2238280e+00,1.2026497e+00,1.2569009e+00,1.4744009e+00,1.5965808e+00,1.5312900e+00,1.5782019e+00,1.6063671e+00,1.5882331e+00,1.5399729e+00,1.4829571e+00,1.5913904e+00,1.5541822e+00,1.3807844e+00,1.4989099e+00,1.6552485e+00,1.5513033e+00,1.6624611e+00,1.6082168e+00,1.2767453e+00,9.4204256e-01,8.4124950e-01,8.8298640e-01,8.3385835e-01,8.8982432e-01,9.9392209e-01,1.0367214e+00,1.1741715e+00,1.3470269e+00,1.4597630e+00,1.4632813e+00,1.2266192e+00,7.9150222e-01,5.2090924e-01,3.1598120e-01,6.0662421e-02,-1.5094423e-01,-4.3789132e-01,-6.6326798e-01,-8.2993668e-01,-9.6212595e-01,-1.0885340e+00,-1.1701120e+00,-1.2266547e+00,-1.2542882e+00,-1.2772138e+00,-1.2909504e+00,-1.2984759e+00,-1.3263513e+00,-1.3715380e+00,-1.4345484e+00,-1.5087360e+00,-1.5991793e+00,-1.6756248e+00,-1.7384660e+00,-1.7840411e+00,-1.8152566e+00,-1.8354984e+00,-1.8508874e+00,-1.8647665e+00,-1.8745952e+00,-1.8802099e+00,-1.8848474e+00,-1.8904282e+00,-1.8956879e+00,-1.9003849e+00,-1.9021319e+00,-1.9054828e+00,-1.9090606e+00,-1.9118669e+00,-1.9156172e+00,-1.9187175e+00,-1.9197991e+00,-1.9225420e+00,-1.9257786e+00,-1.9286037e+00,-1.9321733e+00,-1.9347479e+00,-1.9357306e+00,-1.9370717e+00,-1.9407273e+00,-1.9437857e+00,-1.9443082e+00:0
-4.7263392e-01,-4.1554604e-01,-3.5992940e-01,-4.3049634e-01,-5.5213190e-01,-6.3162068e-01,-7.3257234e-01,-8.0712043e-01,-8.3723976e-01,-8.5019401e-01,-8.5196445e-01,-8.7200099e-01,-8.9811699e-01,-9.0830460e-01,-8.9120121e-01,-8.8407902e-01,-8.9647653e-01,-9.0214250e-01,-9.0740552e-01,-9.0121095e-01,-9.0061756e-01,-9.1929540e-01,-9.3962113e-01,-9.7651746e-01,-1.0097954e+00,-1.0139757e+00,-1.0058555e+00,-1.0149836e+00,-1.0459290e+00,-1.0733367e+00,-1.0714873e+00,-1.0468164e+00,-1.0366613e+00,-1.0307924e+00,-1.0144888e+00,-9.9415527e-01,-9.6097024e-01,-9.2516033e-01,-8.8806801e-01,-8.3999436e-01,-8.0732941e-01,-7.8445698e-01,-7.3812008e-01,-6.8143515e-01,-6.1843946e-01,-6.0401248e-01,-6.1752496e-01,-5.9136095e-01,-5.3030234e-01,-4.6124058e-01,-4.1389883e-01,-3.5599032e-01,-3.0055533e-01,-1.9624379e-01,-9.0742750e-02,2.9952739e-02,2.3113484e-01,3.4483569e-01,3.8607756e-01,4.3568981e-01,5.0224598e-01,5.3968363e-01,6.1366484e-01,6.4003148e-01,6.3845555e-01,7.0767177e-01,7.9180679e-01,8.3790846e-01,8.4673778e-01,9.3130793e-01,9.8438572e-01,1.0583676e+00,1.1459692e+00,1.1713541e+00,1.1545660e+00,1.0540989e+00,9.0820367e-01,8.4157986e-01,8.3299915e-01,8.2189406e-01,8.2511544e-01,8.1888341e-01,7.8885389e-01,7.5741198e-01,7.0521177e-01,6.5459980e-01,6.1260047e-01,6.3570136e-01,7.0300728e-01,7.0133315e-01,6.6718479e-01,6.0967896e-01,5.5180224e-01,5.2278651e-01,5.3754731e-01,5.1734345e-01,4.5930591e-01,4.3170704e-01,4.3752490e-01,3.8900123e-01,2.8802740e-01,2.4856151e-01,2.1324233e-01,1.8583769e-01,2.1130484e-01,2.7382211e-01,2.5758466e-01,1.6015534e-01,1.4451994e-01,1.9486531e-01,2.8785805e-01,3.8587277e-01,4.1616037e-01,4.3559459e-01,4.5429014e-01,4.6355961e-01,5.1846355e-01,5.8641590e-01,6.0194580e-01,6.4767862e-01,6.6179923e-01,6.2737980e-01,6.4343831e-01,6.7146162e-01,6.9968378e-01,6.6748264e-01,5.6697288e-01,4.9461765e-01,4.4196797e-01,3.9316647e-01,3.6907872e-01,3.3538876e-01,2.9232276e-01,2.3702980e-01,2.0268761e-01,2.5281751e-01,2.5437666e-01,2.0265961e-01,1.9551172e-01,2.1932625e-01,2.5530104e-01,2.7202286e-01,3.8316011e-01,5.3962925e-01,6.2271261e-01,7.3913479e-01,8.7131410e-01,9.0501813e-01,8.8876404e-01,8.8977647e-01,1.0012632e+00,1.0839288e+00,1.0663648e+00,1.0923872e+00,1.0684638e+00,1.0240022e+00,1.0578957e+00,1.0611455e+00,1.0399073e+00,9.6850508e-01,8.3970149e-01,7.7480213e-01,7.2184284e-01,6.6762426e-01,6.4494417e-01,6.0199868e-01,5.6653126e-01,4.9537119e-01,3.8994915e-01,3.3738968e-01,2.2416820e-01,9.4682343e-02,-4.2346769e-02,-1.6649183e-01,-2.9160861e-01,-3.7002112e-01,-3.6647429e-01,-3.7009172e-01,-3.7858641e-01,-3.6530131e-01,-3.7797787e-01,-3.1348524e-01,-2.4838245e-01,-2.4243961e-01,-2.2057866e-01,-1.7498340e-01,-1.7946204e-01,-2.0658601e-01,-2.1964671e-01,-2.1923944e-01,-1.1562881e-01,-2.6979858e-02,5.8271467e-02,1.4716430e-01,2.2625149e-01,3.3621602e-01,4.3737977e-01,5.9571227e-01,7.2179333e-01,9.4002864e-01,1.1146378e+00,1.1557776e+00,1.1887976e+00,1.3277325e+00,1.4211412e+00,1.5242969e+00,1.6687980e+00,1.7295198e+00,1.8017098e+00,1.8608900e+00,1.7860929e+00,1.5477396e+00,1.4122075e+00,1.4147878e+00,1.4357519e+00,1.5529586e+00,1.6099687e+00,1.7299962e+00,1.6561280e+00,1.5945443e+00,1.6569526e+00,1.5728455e+00,1.4071127e+00,1.0776628e+00,9.0754697e-01,8.7616390e-01,7.9341545e-01,7.1829236e-01,7.8796807e-01,9.1928252e-01,1.0927747e+00,1.2612440e+00,1.3039532e+00,1.2005761e+00,9.3950653e-01,6.5318849e-01,4.1482655e-01,1.8550671e-01,-6.0610842e-02,-2.5804498e-01,-4.3530732e-01,-6.0608185e-01,-7.6883537e-01,-8.8465158e-01,-9.8311632e-01,-1.0517926e+00,-1.0842147e+00,-1.0631545e+00,-1.0377205e+00,-1.0146564e+00,-9.9438440e-01,-1.0085935e+00,-1.0649910e+00,-1.1585973e+00,-1.2796043e+00,-1.4387757e+00,-1.5678682e+00,-1.6814950e+00,-1.7628956e+00,-1.8154152e+00,-1.8526929e+00,-1.8761970e+00,-1.8939124e+00,-1.9071039e+00,-1.9171784e+00,-1.9234337e+00,-1.9306779e+00,-1.9381380e+00,-1.9422550e+00,-1.9469140e+00,-1.9525730e+00,-1.9557942e+00,-1.9580652e+00,-1.9614649e+00,-1.9655034e+00,-1.9676454e+00,-1.9710757e+00,-1.9746000e+00,-1.9767878e+00,-1.9796759e+00,-1.9816956e+00,-1.9842153e+00,-1.9875860e+00,-1.9891427e+00,-1.9906587e+00,-1.9923005e+00:0
-5.0952091e-01,-4.8421754e-01,-4.7795118e-01,-5.1128686e-01,-5.5858712e-01,-6.5242826e-01,-7.4529837e-01,-7.8735632e-01,-8.1827950e-01,-8.2604987e-01,-8.3002289e-01,-8.3981558e-01,-8.3737684e-01,-8.3190298e-01,-8.8456876e-01,-9.2592265e-01,-9.2660824e-01,-9.1387106e-01,-9.1882562e-01,-9.2658462e-01,-9.2561501e-01,-9.4510965e-01,-9.7565400e-01,-1.0095638e+00,-1.0288078e+00,-1.0214263e+00,-1.0203116e+00,-1.0155284e+00,-1.0067394e+00,-1.0244057e+00,-1.0365524e+00,-1.0396432e+00,-1.0435909e+00,-1.0413333e+00,-1.0186990e+00,-9.8876267e-01,-9.5553807e-01,-9.1127598e-01,-8.6384704e-01,-8.3011309e-01,-7.8842488e-01,-7.4428152e-01,-6.7757944e-01,-5.7950059e-01,-5.2163503e-01,-4.9553588e-01,-5.0804282e-01,-5.1776794e-01,-5.0485726e-01,-4.7640060e-01,-4.0920677e-01,-3.3294629e-01,-2.8425857e-01,-2.1482945e-01,-1.5543551e-01,-9.1116850e-02,5.5138622e-02,1.3980652e-01,2.0204841e-01,3.2243323e-01,3.9749068e-01,4.0327765e-01,3.7738786e-01,4.6163256e-01,5.4276102e-01,5.9916565e-01,6.8404881e-01,6.6790776e-01,6.5378411e-01,7.7372932e-01,8.5246079e-01,8.4717815e-01,8.7616231e-01,8.3438849e-01,8.3558562e-01,8.1746390e-01,7.8314724e-01,7.3463706e-01,7.3598429e-01,7.6153145e-01,7.3993644e-01,7.2534694e-01,6.9600889e-01,6.0960500e-01,5.2368007e-01,5.3590877e-01,5.4198261e-01,5.2875292e-01,5.7981510e-01,6.4199271e-01,6.5422141e-01,6.4910002e-01,6.5590930e-01,6.4901037e-01,5.3164023e-01,4.1110728e-01,4.2779343e-01,4.8739138e-01,4.7993368e-01,3.9385930e-01,3.3535156e-01,2.4254453e-01,1.9622296e-01,2.2000614e-01,2.0667084e-01,2.1163590e-01,2.0440789e-01,2.3278267e-01,2.3841965e-01,2.3953795e-01,2.7083185e-01,3.3897398e-01,4.2072002e-01,4.5588407e-01,4.9014684e-01,5.3207710e-01,5.8039508e-01,6.0643257e-01,6.4126536e-01,7.1476131e-01,8.1472877e-01,8.3925964e-01,8.0901483e-01,8.1501291e-01,7.8254091e-01,7.1255456e-01,6.4339876e-01,5.5555340e-01,4.9357979e-01,4.5210138e-01,3.7895845e-01,3.5284257e-01,3.1134458e-01,2.7534681e-01,2.7280158e-01,2.0496032e-01,2.0959357e-01,2.4333256e-01,2.0880653e-01,2.1112742e-01,2.7366526e-01,3.2833488e-01,3.7766468e-01,4.8318177e-01,5.9984588e-01,7.0975777e-01,8.0702553e-01,9.3531387e-01,9.4312907e-01,8.6730042e-01,9.8748124e-01,1.0764943e+00,1.0631287e+00,1.0224156e+00,1.0317520e+00,1.0712873e+00,1.0397144e+00,1.0240382e+00,9.6383089e-01,9.0106838e-01,8.8175949e-01,8.3535089e-01,7.6591642e-01,7.0020440e-01,6.7678560e-01,6.6429900e-01,6.2173804e-01,5.6769059e-01,5.2010980e-01,3.9852557e-01,2.4373400e-01,1.3515239e-01,5.9056895e-03,-1.3614925e-01,-2.5279204e-01,-3.1707757e-01,-3.2294610e-01,-3.1931832e-01,-3.3348144e-01,-3.4437526e-01,-3.3336949e-01,-2.6460387e-01,-2.0696987e-01,-1.9109164e-01,-1.4710506e-01,-9.0441760e-02,-1.1817206e-01,-1.3418804e-01,-1.3975210e-01,-1.2171380e-01,-4.4881427e-02,2.1836506e-02,1.3367386e-01,2.0377129e-01,2.5952882e-01,3.9998737e-01,4.8384920e-01,5.8766473e-01,6.9196786e-01,8.6074172e-01,9.9117341e-01,1.0916063e+00,1.1864525e+00,1.2890088e+00,1.4111870e+00,1.4794606e+00,1.5226664e+00,1.6995985e+00,1.7199415e+00,1.6748996e+00,1.8250376e+00,1.8745799e+00,1.6971177e+00,1.5589591e+00,1.5557025e+00,1.6021545e+00,1.6375261e+00,1.5871015e+00,1.6555939e+00,1.7302100e+00,1.7558736e+00,1.7820560e+00,1.5260409e+00,1.2042742e+00,1.0367038e+00,9.0827681e-01,8.6735115e-01,9.4741663e-01,9.8594290e-01,1.0073086e+00,1.1243016e+00,1.3995338e+00,1.4713169e+00,1.3150127e+00,9.7390728e-01,7.2090764e-01,5.2875019e-01,2.8194629e-01,4.2995964e-02,-2.1383895e-01,-4.5156340e-01,-6.3206448e-01,-8.0335689e-01,-9.3271871e-01,-1.0460192e+00,-1.1135156e+00,-1.1742908e+00,-1.1994610e+00,-1.1925887e+00,-1.1929684e+00,-1.2003006e+00,-1.2198764e+00,-1.2647619e+00,-1.3348236e+00,-1.4234637e+00,-1.5376151e+00,-1.6326975e+00,-1.7135694e+00,-1.7686219e+00,-1.8039410e+00,-1.8311562e+00,-1.8485211e+00,-1.8616275e+00,-1.8713096e+00,-1.8805613e+00,-1.8884902e+00,-1.8951934e+00,-1.8996327e+00,-1.9040938e+00,-1.9088548e+00,-1.9118451e+00,-1.9146980e+00,-1.9177236e+00,-1.9221802e+00,-1.9250081e+00,-1.9275616e+00,-1.9308694e+00,-1.9331977e+00,-1.9373284e+00,-1.9412412e+00,-1.9439849e+00,-1.9457617e+00,-1.9476127e+00,-1.9501716e+00,-1.9517476e+00,-1.9529217e+00:0
-5.6342677e-01,-5.3389622e-01,-5.4382160e-01,-5.9824625e-01,-6.9025962e-01,-7.9438396e-01,-8.8414007e-01,-9.2396995e-01,-9.3950366e-01,-9.5351568e-01,-9.5893980e-01,-9.8632095e-01,-9.8852591e-01,-9.7580926e-01,-9.8546957e-01,-9.8883899e-01,-9.9925180e-01,-1.0026849e+00,-9.8385173e-01,-9.8491965e-01,-1.0018161e+00,-1.0087719e+00,-1.0231687e+00,-1.0460031e+00,-1.0731982e+00,-1.0812533e+00,-1.0686455e+00,-1.0779797e+00,-1.0953768e+00,-1.1065693e+00,-1.1134956e+00,-1.1006994e+00,-1.0812791e+00,-1.0832293e+00,-1.0728334e+00,-1.0399594e+00,-1.0244742e+00,-9.8892106e-01,-9.3060879e-01,-8.7991233e-01,-8.3701887e-01,-8.0609304e-01,-7.4890568e-01,-6.7556525e-01,-6.2795103e-01,-6.0985369e-01,-6.0201124e-01,-5.8620909e-01,-5.5438029e-01,-5.1125674e-01,-4.7237050e-01,-4.0496302e-01,-3.0104930e-01,-1.9375260e-01,-8.5304588e-02,5.5368189e-02,1.9171220e-01,3.1195279e-01,4.4437909e-01,5.1485688e-01,5.1897166e-01,5.9475632e-01,6.6440690e-01,6.6869265e-01,7.5224463e-01,7.9140439e-01,7.8946817e-01,8.8634636e-01,9.2848570e-01,9.6156082e-01,1.1246862e+00,1.1699644e+00,1.0707192e+00,1.1468520e+00,1.1412046e+00,1.0551498e+00,9.5821627e-01,7.6428903e-01,6.8666591e-01,7.5272399e-01,8.7620107e-01,8.6580928e-01,8.2613212e-01,7.1003851e-01,6.0399742e-01,5.8003392e-01,6.1711596e-01,6.9039063e-01,7.0960441e-01,6.9691019e-01,6.7385169e-01,6.6641173e-01,6.1743027e-01,5.8992076e-01,5.6476864e-01,4.8249500e-01,4.4468606e-01,4.4252249e-01,3.8703329e-01,2.9782547e-01,2.3604752e-01,2.1153197e-01,1.9629778e-01,2.1354037e-01,2.6546287e-01,2.3810486e-01,1.6512380e-01,1.6759016e-01,1.8157772e-01,2.3047487e-01,3.2972624e-01,3.7468988e-01,4.1328933e-01,4.8172640e-01,5.1810101e-01,5.8629188e-01,6.6488902e-01,6.6331890e-01,6.6539183e-01,7.0593668e-01,7.2772010e-01,7.3773010e-01,7.7023838e-01,7.9203852e-01,7.6812089e-01,7.0627485e-01,6.5054260e-01,5.7432445e-01,4.8769757e-01,4.7597330e-01,4.1698030e-01,3.4130157e-01,3.1315233e-01,2.8906985e-01,2.7029557e-01,2.3519003e-01,1.9789726e-01,1.8794721e-01,2.2293857e-01,2.8174010e-01,3.2906051e-01,3.7555063e-01,4.5803572e-01,5.5255215e-01,6.6325232e-01,7.4515803e-01,8.8230254e-01,1.0037071e+00,9.3159026e-01,9.1802529e-01,1.0081645e+00,1.0441432e+00,1.0659956e+00,1.1104871e+00,1.0897723e+00,1.0626688e+00,1.0849617e+00,1.0131493e+00,9.4977955e-01,9.6536690e-01,8.5332670e-01,7.5702259e-01,7.2466549e-01,6.9777615e-01,6.7765991e-01,6.3457825e-01,5.5045821e-01,4.6256135e-01,3.6021388e-01,2.8236311e-01,1.0943988e-01,-3.9382114e-02,-1.6365501e-01,-2.6841205e-01,-3.4043845e-01,-3.7671784e-01,-3.8155565e-01,-4.1311244e-01,-4.2215749e-01,-4.1793556e-01,-3.9957989e-01,-3.2116574e-01,-2.4976358e-01,-1.8271862e-01,-1.4037732e-01,-1.6205716e-01,-1.6199466e-01,-1.5129539e-01,-1.8289540e-01,-1.6905180e-01,-6.4984655e-02,8.4755638e-03,1.1353172e-01,2.5310345e-01,4.0980888e-01,4.9199637e-01,5.5589853e-01,6.7854850e-01,7.8007354e-01,9.4534027e-01,1.1316110e+00,1.2593728e+00,1.3173874e+00,1.4499491e+00,1.6126803e+00,1.6657988e+00,1.7474009e+00,1.8308530e+00,1.7217769e+00,1.7125435e+00,1.6961376e+00,1.5272692e+00,1.4338169e+00,1.3599120e+00,1.4476601e+00,1.5674916e+00,1.5378068e+00,1.6079503e+00,1.6261030e+00,1.6758771e+00,1.6366599e+00,1.4623056e+00,1.2928533e+00,1.0671394e+00,9.2730839e-01,7.9878339e-01,7.1610644e-01,7.0153634e-01,7.8820329e-01,9.6125671e-01,1.0645719e+00,1.2476239e+00,1.3247336e+00,1.0907386e+00,8.0683504e-01,4.9894198e-01,2.0954885e-01,-1.2323736e-02,-2.1747153e-01,-3.9950964e-01,-5.9589336e-01,-7.4401292e-01,-8.7962065e-01,-9.8484176e-01,-1.0801923e+00,-1.1321557e+00,-1.1462140e+00,-1.1274517e+00,-1.1066970e+00,-1.0934718e+00,-1.0659397e+00,-1.0620226e+00,-1.1041129e+00,-1.1868495e+00,-1.3000841e+00,-1.4376597e+00,-1.5471993e+00,-1.6386998e+00,-1.7010534e+00,-1.7413060e+00,-1.7700111e+00,-1.7882323e+00,-1.8009765e+00,-1.8095021e+00,-1.8156862e+00,-1.8220923e+00,-1.8287297e+00,-1.8330664e+00,-1.8355009e+00,-1.8384494e+00,-1.8419489e+00,-1.8440295e+00,-1.8461902e+00,-1.8491015e+00,-1.8513284e+00,-1.8530087e+00,-1.8558202e+00,-1.8578697e+00,-1.8591976e+00,-1.8610028e+00,-1.8631210e+00,-1.8650410e+00,-1.8661225e+00,-1.8669447e+00,-1.8684191e+00,-1.8695715e+00:0
-4.4148543e-01,-4.4936588e-01,-4.4454026e-01,-4.9762005e-01,-5.8064202e-01,-6.4905496e-01,-7.4259774e-01,-8.1046908e-01,-8.2545751e-01,-8.3678627e-01,-8.6241533e-01,-8.4408514e-01,-8.2226877e-01,-8.4541316e-01,-8.9702358e-01,-9.3829944e-01,-9.5890535e-01,-9.5632317e-01,-9.4416667e-01,-9.5401052e-01,-9.6120551e-01,-9.8570315e-01,-1.0155339e+00,-1.0215018e+00,-1.0276040e+00,-1.0312630e+00,-1.0110437e+00,-9.9653177e-01,-1.0053108e+00,-1.0247495e+00,-1.0410860e+00,-1.0455284e+00,-1.0402712e+00,-1.0227400e+00,-9.9541616e-01,-9.6538883e-01,-9.4188723e-01,-9.0690277e-01,-8.6480662e-01,-8.0965821e-01,-7.1577615e-01,-6.6484814e-01,-6.0487478e-01,-5.3243314e-01,-4.8357534e-01,-4.2462074e-01,-3.9651271e-01,-4.1006007e-01,-4.1013114e-01,-3.7462289e-01,-3.6526045e-01,-3.3545470e-01,-2.6767608e-01,-2.2047893e-01,-8.7451139e-02,4.5841542e-02,4.8068106e-02,1.1588485e-01,2.6274773e-01,3.4265828e-01,3.9618349e-01,4.6838189e-01,5.1847871e-01,5.5241877e-01,4.4085013e-01,4.7279968e-01,5.9775520e-01,6.0700791e-01,6.4271091e-01,7.5693772e-01,8.7283182e-01,8.4753951e-01,8.2982504e-01,8.1202036e-01,8.8092482e-01,8.9013342e-01,7.9245567e-01,7.8019090e-01,7.2152830e-01,6.7254442e-01,6.2908784e-01,7.1445061e-01,8.3314848e-01,7.8404624e-01,6.8988229e-01,6.0994172e-01,6.3182584e-01,6.2571285e-01,5.8245526e-01,6.4992277e-01,7.4696859e-01,7.7693402e-01,7.7737067e-01,7.3834303e-01,6.5349369e-01,6.2086877e-01,6.2291573e-01,6.0460174e-01,5.4311160e-01,5.0983934e-01,4.6769789e-01,3.6629285e-01,3.1899846e-01,3.3282983e-01,3.5439991e-01,3.5385486e-01,3.2030775e-01,2.9262256e-01,2.9374149e-01,2.9711355e-01,3.6156116e-01,4.6143306e-01,4.9296363e-01,4.9854525e-01,5.1530791e-01,5.4920306e-01,6.1283980e-01,7.0846608e-01,7.4353463e-01,7.0970311e-01,7.7011165e-01,8.2161939e-01,8.2093871e-01,8.7490548e-01,8.4359995e-01,7.8864616e-01,7.1644895e-01,6.4685213e-01,6.1479657e-01,5.4229874e-01,5.0287443e-01,4.6449454e-01,3.8449127e-01,3.4748230e-01,3.4445988e-01,3.1845912e-01,3.1314491e-01,3.2920245e-01,3.2132399e-01,3.0438665e-01,2.9307741e-01,3.6617555e-01,4.6978018e-01,5.0230933e-01,5.4717058e-01,6.3011563e-01,7.1891423e-01,7.7746751e-01,7.5164423e-01,7.0121304e-01,8.0765332e-01,9.4918154e-01,9.9774085e-01,9.9146367e-01,1.0224132e+00,1.0741093e+00,1.0683293e+00,1.0531350e+00,1.0061067e+00,8.8681211e-01,8.5573068e-01,8.6060624e-01,8.3564830e-01,7.9001908e-01,7.3633473e-01,7.3237006e-01,6.8993383e-01,6.4503923e-01,5.9200235e-01,4.9284752e-01,3.1318982e-01,1.7527968e-01,8.6398454e-02,-2.0495476e-02,-1.2918065e-01,-2.1652928e-01,-2.3398976e-01,-2.4140632e-01,-2.4109521e-01,-2.2301861e-01,-2.3900095e-01,-1.7970164e-01,-1.1679832e-01,-5.7672491e-02,6.0898247e-02,1.2140364e-01,6.4294351e-02,-7.3976582e-02,-1.4448019e-01,-6.3078229e-02,2.1159109e-02,8.3695785e-02,1.5100866e-01,1.8107252e-01,2.9818253e-01,3.3142609e-01,3.7382619e-01,5.1185854e-01,5.4557688e-01,6.2996380e-01,7.2938550e-01,8.0716061e-01,8.9708757e-01,9.7824549e-01,1.1003380e+00,1.1559300e+00,1.1869844e+00,1.3362439e+00,1.4167728e+00,1.4076511e+00,1.4739919e+00,1.4893878e+00,1.3862693e+00,1.2725002e+00,1.3172459e+00,1.5061888e+00,1.4158859e+00,1.3907998e+00,1.4873887e+00,1.6425155e+00,1.6983080e+00,1.5443096e+00,1.3966105e+00,1.1928853e+00,1.0596306e+00,9.6054271e-01,8.9567971e-01,9.5751617e-01,1.0641257e+00,1.0944062e+00,1.1417386e+00,1.3966608e+00,1.5129621e+00,1.3611637e+00,1.1495048e+00,9.4441530e-01,7.2368087e-01,4.9745037e-01,2.1956587e-01,-8.1968487e-02,-3.3819178e-01,-5.1258775e-01,-7.1728510e-01,-8.7706461e-01,-1.0049598e+00,-1.0965542e+00,-1.1537288e+00,-1.1684633e+00,-1.1872110e+00,-1.2013125e+00,-1.1891976e+00,-1.2078202e+00,-1.2634496e+00,-1.3508457e+00,-1.4618626e+00,-1.5914539e+00,-1.7034542e+00,-1.7973122e+00,-1.8627056e+00,-1.9059964e+00,-1.9368895e+00,-1.9583686e+00,-1.9744378e+00,-1.9856151e+00,-1.9947521e+00,-2.0016881e+00,-2.0083848e+00,-2.0149157e+00,-2.0188304e+00,-2.0231834e+00,-2.0265142e+00,-2.0293005e+00,-2.0328671e+00,-2.0355179e+00,-2.0391486e+00,-2.0423481e+00,-2.0445485e+00,-2.0458944e+00,-2.0484175e+00,-2.0530403e+00,-2.0557195e+00,-2.0568855e+00,-2.0598488e+00,-2.0621595e+00,-2.0631785e+00,-2.0641610e+00:0
-4.9643764e-01,-4.6567683e-01,-4.1583360e-01,-4.5890541e-01,-5.6657688e-01,-6.7091180e-01,-7.4188335e-01,-7.8550748e-01,-8.3705919e-01,-8.6051453e-01,-8.6578472e-01,-8.6088209e-01,-8.4750436e-01,-8.6191350e-01,-8.9525006e-01,-9.1137879e-01,-9.3397983e-01,-9.5656369e-01,-9.4996085e-01,-9.3479176e-01,-9.2889032e-01,-9.3123635e-01,-9.6274240e-01,-1.0016448e+00,-1.0334067e+00,-1.0405846e+00,-1.0157795e+00,-1.0040009e+00,-1.0232126e+00,-1.0556572e+00,-1.0643172e+00,-1.0585760e+00,-1.0424456e+00,-1.0237406e+00,-1.0225609e+00,-1.0028159e+00,-9.6853059e-01,-9.3908649e-01,-9.0904919e-01,-8.5976805e-01,-7.9942284e-01,-7.3902094e-01,-6.7580801e-01,-6.2736709e-01,-5.8701628e-01,-5.5271797e-01,-5.5119314e-01,-5.3023995e-01,-4.8617972e-01,-4.7364456e-01,-4.1485135e-01,-3.2832833e-01,-2.6247752e-01,-1.6837175e-01,-7.5193280e-02,3.1175684e-02,1.6088104e-01,2.8203782e-01,3.3541498e-01,4.0187097e-01,4.9502128e-01,5.0297369e-01,5.0951774e-01,5.9146839e-01,6.6207671e-01,6.5078799e-01,7.2594818e-01,8.3882847e-01,9.9749624e-01,1.0942981e+00,1.0494102e+00,1.1207824e+00,1.1478948e+00,1.1009812e+00,1.0650163e+00,1.0056185e+00,8.8830340e-01,7.4967498e-01,6.9317247e-01,7.2061055e-01,7.4213188e-01,8.2726889e-01,8.6273967e-01,7.0132965e-01,6.2681738e-01,5.6901977e-01,6.0164628e-01,6.4173883e-01,6.0551985e-01,6.7689614e-01,7.0561352e-01,6.7452714e-01,6.7238058e-01,6.7636530e-01,6.0030141e-01,5.6234307e-01,5.7337292e-01,5.0970881e-01,4.7739761e-01,4.2328349e-01,3.2252276e-01,2.7517833e-01,2.6691703e-01,2.6076351e-01,2.5131617e-01,2.4887257e-01,2.1232234e-01,1.9052398e-01,2.1395227e-01,2.6465659e-01,3.3031671e-01,3.6506409e-01,4.0486220e-01,4.4115949e-01,5.2921264e-01,6.2522216e-01,6.5439774e-01,7.3053377e-01,7.6663011e-01,7.7673427e-01,7.9433905e-01,8.1868944e-01,8.1382114e-01,8.0802567e-01,8.1585395e-01,7.3419824e-01,6.0242734e-01,5.3078909e-01,5.3102265e-01,4.7251696e-01,3.9472643e-01,3.2853276e-01,3.0000089e-01,2.4190760e-01,1.7827055e-01,1.9401703e-01,1.7363555e-01,1.8083432e-01,1.9903724e-01,1.8021048e-01,2.3108327e-01,2.9623527e-01,3.6295236e-01,5.0874422e-01,6.4896316e-01,7.1997683e-01,7.9851533e-01,8.7390846e-01,8.6932312e-01,8.6287639e-01,9.9080312e-01,1.0709648e+00,1.0316990e+00,1.0702640e+00,1.1156003e+00,1.0562424e+00,1.0054937e+00,9.8980789e-01,9.4316388e-01,8.9676824e-01,8.5085515e-01,7.4263814e-01,6.2429523e-01,6.1981524e-01,6.1150392e-01,5.5999432e-01,5.3988493e-01,4.3140942e-01,2.8338047e-01,2.0182147e-01,8.0720026e-02,-2.0080721e-02,-1.4461432e-01,-2.6079708e-01,-3.6172454e-01,-4.5070685e-01,-4.8175876e-01,-4.6289260e-01,-4.7198437e-01,-4.7434830e-01,-4.6841574e-01,-3.8470017e-01,-3.2507588e-01,-2.7118444e-01,-1.8938398e-01,-1.7471226e-01,-2.0116093e-01,-2.7296727e-01,-3.1345863e-01,-2.7941598e-01,-1.9878106e-01,-1.0757723e-01,3.2901703e-02,1.1616350e-01,1.3173485e-01,2.7860950e-01,4.0229028e-01,5.6375118e-01,7.1036621e-01,8.9232617e-01,1.0245964e+00,1.0927111e+00,1.2717870e+00,1.4798660e+00,1.4956777e+00,1.5913557e+00,1.7157377e+00,1.7274918e+00,1.7993721e+00,1.8397685e+00,1.7201592e+00,1.6345987e+00,1.6508081e+00,1.5555926e+00,1.5424093e+00,1.6059820e+00,1.5424823e+00,1.5425361e+00,1.6269854e+00,1.7488272e+00,1.6653469e+00,1.5111724e+00,1.2928814e+00,1.0835097e+00,9.3872007e-01,7.6466498e-01,6.9740458e-01,8.2129681e-01,9.3944124e-01,9.9621991e-01,1.0622391e+00,1.3223629e+00,1.4537320e+00,1.3023623e+00,1.0103961e+00,6.7464978e-01,3.8514223e-01,1.1665074e-01,-1.0316541e-01,-3.1237991e-01,-5.2357659e-01,-6.7397281e-01,-8.3761584e-01,-9.6283565e-01,-1.0620271e+00,-1.1262261e+00,-1.1645256e+00,-1.1743749e+00,-1.1703682e+00,-1.1644262e+00,-1.1565572e+00,-1.1725090e+00,-1.2201176e+00,-1.2970226e+00,-1.3878974e+00,-1.4972780e+00,-1.5909837e+00,-1.6723677e+00,-1.7307068e+00,-1.7686521e+00,-1.7952432e+00,-1.8123101e+00,-1.8267989e+00,-1.8371562e+00,-1.8439241e+00,-1.8503251e+00,-1.8572827e+00,-1.8622347e+00,-1.8649052e+00,-1.8680614e+00,-1.8717957e+00,-1.8736784e+00,-1.8769406e+00,-1.8810680e+00,-1.8842128e+00,-1.8867838e+00,-1.8885090e+00,-1.8903836e+00,-1.8932553e+00,-1.8960333e+00,-1.8979991e+00,-1.8998945e+00,-1.9022135e+00,-1.9042587e+00,-1.9059171e+00,-1.9067571e+00:0
-4.6057761e-01,-3.6922868e-01,-3.5411628e-01,-4.5859699e-01,-5.4103587e-01,-6.2855279e-01,-7.1531853e-01,-7.5360706e-01,-7.8490742e-01,-8.0041320e-01,-8.2072021e-01,-8.5523832e-01,-8.7438663e-01,-8.7615420e-01,-8.7295477e-01,-8.7529642e-01,-9.0858765e-01,-9.2496252e-01,-9.1628468e-01,-9.0181752e-01,-9.0747598e-01,-9.2489123e-01,-9.4350197e-01,-9.7867827e-01,-9.9850322e-01,-9.9662785e-01,-9.7811091e-01,-9.8473738e-01,-1.0072277e+00,-1.0228200e+00,-1.0281203e+00,-1.0242882e+00,-1.0216385e+00,-1.0294237e+00,-1.0240610e+00,-9.9140172e-01,-9.5645923e-01,-9.1615894e-01,-8.8228069e-01,-8.3857331e-01,-7.6872540e-01,-7.3880879e-01,-7.0451964e-01,-6.4915843e-01,-6.0102662e-01,-5.6365677e-01,-5.7179515e-01,-5.7279119e-01,-5.5455294e-01,-5.1463848e-01,-4.7658053e-01,-4.1503730e-01,-3.4417139e-01,-2.8294297e-01,-2.0039290e-01,-7.1746500e-02,8.5759423e-02,1.3299142e-01,2.0393226e-01,3.3555721e-01,3.8155463e-01,3.7403428e-01,3.3070679e-01,3.7553070e-01,4.7509482e-01,5.4222508e-01,6.1589138e-01,6.6965996e-01,7.4291132e-01,7.6437151e-01,7.5788816e-01,8.1480010e-01,8.4645502e-01,7.7014451e-01,7.1669883e-01,7.5211084e-01,7.6050743e-01,6.8041653e-01,6.5163127e-01,5.9442770e-01,6.0560608e-01,6.9718100e-01,6.4442572e-01,5.7208953e-01,5.0794954e-01,5.0619761e-01,5.1244782e-01,5.1667913e-01,5.8209870e-01,6.0845836e-01,5.7328542e-01,5.6331264e-01,5.5618620e-01,5.1486723e-01,4.7106686e-01,4.3468618e-01,4.3545204e-01,4.0827680e-01,3.5370989e-01,3.0325542e-01,2.1968493e-01,1.8802273e-01,2.3433401e-01,2.5556469e-01,2.2337894e-01,1.9742519e-01,1.5823873e-01,1.6136134e-01,1.7376688e-01,2.0799983e-01,3.2489592e-01,4.2917623e-01,4.3590283e-01,4.2094136e-01,4.9416833e-01,5.8724129e-01,5.9476070e-01,5.8974372e-01,6.7897092e-01,7.0280362e-01,7.0269580e-01,7.2916340e-01,7.7316457e-01,7.9018995e-01,7.3351870e-01,6.5811192e-01,6.0769869e-01,5.8826051e-01,5.0485146e-01,4.2257779e-01,4.0864767e-01,3.5991670e-01,2.7194280e-01,2.6750840e-01,3.0898046e-01,2.9363477e-01,2.5127880e-01,2.4583516e-01,2.4736755e-01,2.6410238e-01,2.8270355e-01,3.1944351e-01,4.0090778e-01,5.2223719e-01,6.5135999e-01,7.5324811e-01,7.7624069e-01,7.5146747e-01,7.6395091e-01,8.2598279e-01,9.7372400e-01,1.0525787e+00,1.0879890e+00,1.0573151e+00,1.0033166e+00,1.0377512e+00,1.0810482e+00,1.1172427e+00,1.0873835e+00,9.7911886e-01,9.5119528e-01,9.0341817e-01,7.9700953e-01,6.6139961e-01,6.1687031e-01,6.8964299e-01,6.2833520e-01,5.1614102e-01,4.7441426e-01,3.8582206e-01,2.5037562e-01,1.4373114e-01,1.8350468e-02,-1.0279916e-01,-1.9592522e-01,-2.5350424e-01,-2.8729719e-01,-3.0784596e-01,-3.1622489e-01,-3.3131479e-01,-3.4598302e-01,-3.0904266e-01,-2.2471843e-01,-1.8392680e-01,-1.7382262e-01,-1.0898293e-01,-9.0972434e-02,-1.6535743e-01,-2.0048926e-01,-2.1321082e-01,-1.4576346e-01,-1.4571965e-04,1.0917125e-01,1.4955401e-01,2.5245623e-01,4.4371926e-01,5.3568446e-01,6.6016154e-01,7.4170465e-01,8.2998797e-01,8.9391409e-01,1.0326472e+00,1.1710058e+00,1.2646268e+00,1.4386844e+00,1.5194286e+00,1.6113656e+00,1.7934299e+00,1.8462339e+00,1.9242722e+00,1.9421959e+00,1.7811148e+00,1.6849676e+00,1.6285573e+00,1.5823634e+00,1.6510831e+00,1.6584261e+00,1.6756774e+00,1.6572002e+00,1.7361114e+00,1.7335744e+00,1.5580353e+00,1.5402515e+00,1.2723141e+00,1.0438090e+00,1.0006484e+00,8.0823171e-01,8.8268746e-01,1.0930115e+00,1.0503583e+00,1.1017679e+00,1.4486094e+00,1.5802127e+00,1.3651748e+00,1.1050251e+00,8.0306217e-01,5.3537180e-01,3.7045253e-01,1.1464158e-01,-1.0937253e-01,-3.3880132e-01,-5.1133839e-01,-6.7754291e-01,-8.3063006e-01,-9.6508114e-01,-1.0454271e+00,-1.0738733e+00,-1.0640542e+00,-1.0573054e+00,-1.0416586e+00,-1.0286148e+00,-1.0459909e+00,-1.0896410e+00,-1.1809305e+00,-1.3055732e+00,-1.4636424e+00,-1.5892557e+00,-1.6957370e+00,-1.7703228e+00,-1.8190284e+00,-1.8549987e+00,-1.8789892e+00,-1.8961946e+00,-1.9066363e+00,-1.9164344e+00,-1.9265560e+00,-1.9347410e+00,-1.9399105e+00,-1.9439987e+00,-1.9481112e+00,-1.9524431e+00,-1.9571366e+00,-1.9603341e+00,-1.9638049e+00,-1.9681073e+00,-1.9713929e+00,-1.9741156e+00,-1.9771541e+00,-1.9807902e+00,-1.9843966e+00,-1.9874584e+00,-1.9897085e+00,-1.9918831e+00,-1.9940428e+00,-1.9970273e+00,-1.9992659e+00:0
-5.9846394e-01,-5.5997954e-01,-5.6824434e-01,-6.1179261e-01,-6.7044143e-01,-7.4241476e-01,-7.9357026e-01,-8.5663907e-01,-8.9109943e-01,-8.6448291e-01,-8.5796403e-01,-8.6661334e-01,-8.8373158e-01,-8.9834973e-01,-9.3448515e-01,-9.6410959e-01,-9.5956821e-01,-9.7467902e-01,-9.8216635e-01,-9.6478041e-01,-9.6458986e-01,-9.9681571e-01,-1.0221721e+00,-1.0276364e+00,-1.0340038e+00,-1.0157695e+00,-9.8616827e-01,-9.8846028e-01,-9.8855368e-01,-1.0029563e+00,-1.0176878e+00,-1.0145962e+00,-1.0175925e+00,-1.0186352e+00,-1.0142115e+00,-1.0123699e+00,-1.0011060e+00,-9.5531141e-01,-8.9808373e-01,-8.3910041e-01,-7.8842229e-01,-7.4921375e-01,-6.7015118e-01,-5.7383326e-01,-4.9785620e-01,-4.2655658e-01,-4.2439078e-01,-4.3686054e-01,-3.9382610e-01,-3.7662600e-01,-3.6792197e-01,-2.6779386e-01,-1.8596842e-01,-1.5163149e-01,-5.6883684e-02,4.1565838e-02,1.6263734e-01,2.8312031e-01,3.6540209e-01,4.2151342e-01,4.4549915e-01,5.4662733e-01,6.2585459e-01,6.6255342e-01,7.3404797e-01,7.8304281e-01,8.3174087e-01,8.6216597e-01,9.8091233e-01,9.9730321e-01,9.9409929e-01,1.0973297e+00,1.0535446e+00,1.0878360e+00,1.0876312e+00,8.5183144e-01,7.8266268e-01,7.7216945e-01,7.8243590e-01,8.3161497e-01,8.6423356e-01,8.6406482e-01,6.8131594e-01,6.3049729e-01,6.6220834e-01,6.2334210e-01,5.8619901e-01,5.5545480e-01,6.4119100e-01,7.4338627e-01,7.0793588e-01,7.1905066e-01,6.9779393e-01,6.2302898e-01,5.9387753e-01,5.6572510e-01,5.5739340e-01,5.1348306e-01,4.8126363e-01,4.4224339e-01,3.8120370e-01,2.8908070e-01,2.5091680e-01,2.6103920e-01,2.8220274e-01,3.1800922e-01,2.9139409e-01,2.5018016e-01,2.2353201e-01,2.5965546e-01,3.3753350e-01,4.4465082e-01,4.6925863e-01,4.9010125e-01,5.3802600e-01,5.7380074e-01,6.7486289e-01,7.9793849e-01,8.4069123e-01,8.2656243e-01,9.0887157e-01,9.4479336e-01,9.2619018e-01,9.3533430e-01,9.0163784e-01,8.0473802e-01,6.9210669e-01,5.7980185e-01,4.9970458e-01,4.4262748e-01,3.8185250e-01,3.3339479e-01,3.3041956e-01,2.8950946e-01,2.4317705e-01,2.5427291e-01,2.5787652e-01,2.4478125e-01,2.4853256e-01,2.5838714e-01,2.8681722e-01,3.6592361e-01,4.6200054e-01,5.8852298e-01,6.5964563e-01,7.3460786e-01,9.1293536e-01,1.0344753e+00,9.4029055e-01,8.9580206e-01,1.0104730e+00,1.0662304e+00,1.1324848e+00,1.1037101e+00,1.0649801e+00,1.0937458e+00,1.0625809e+00,1.0249705e+00,9.3536155e-01,8.3625564e-01,8.2799330e-01,8.0317164e-01,7.3274086e-01,7.0169560e-01,6.7578249e-01,6.2633058e-01,5.6160039e-01,5.4111568e-01,4.2851995e-01,2.6464826e-01,1.2629972e-01,3.1219234e-02,-8.3444629e-02,-2.2873376e-01,-3.5108010e-01,-4.2020484e-01,-4.4738487e-01,-4.5188244e-01,-4.3213791e-01,-4.5564903e-01,-4.7329381e-01,-3.7060342e-01,-2.8298066e-01,-2.5216377e-01,-2.3723742e-01,-2.2174690e-01,-2.3512900e-01,-2.7171231e-01,-2.9941739e-01,-3.2457451e-01,-2.3235063e-01,-1.2436104e-01,-6.5654723e-02,-1.0527868e-02,8.8408869e-02,2.2280925e-01,3.2216491e-01,4.4229244e-01,5.9402662e-01,7.9428732e-01,8.9263265e-01,1.0592731e+00,1.2616952e+00,1.4224049e+00,1.4852851e+00,1.5571543e+00,1.6239640e+00,1.6939030e+00,1.7509991e+00,1.7573317e+00,1.6339202e+00,1.4919940e+00,1.5522505e+00,1.6243057e+00,1.5457246e+00,1.4661066e+00,1.4414061e+00,1.4074748e+00,1.4355752e+00,1.6736605e+00,1.6582366e+00,1.4590843e+00,1.2374598e+00,8.9171005e-01,7.0051021e-01,6.5407809e-01,6.3990366e-01,7.3028481e-01,9.0635983e-01,1.0138132e+00,1.2534032e+00,1.6260184e+00,1.4605748e+00,1.3050873e+00,1.0565459e+00,6.3359958e-01,3.1074246e-01,5.6730300e-02,-1.8853134e-01,-4.0868011e-01,-6.2617095e-01,-7.9439678e-01,-9.4971801e-01,-1.0658100e+00,-1.1813423e+00,-1.2521439e+00,-1.3033798e+00,-1.3363377e+00,-1.3576313e+00,-1.3795084e+00,-1.3996843e+00,-1.4228703e+00,-1.4571277e+00,-1.5044282e+00,-1.5568756e+00,-1.6149483e+00,-1.6582734e+00,-1.6955988e+00,-1.7240053e+00,-1.7428848e+00,-1.7565989e+00,-1.7669820e+00,-1.7763045e+00,-1.7823200e+00,-1.7862533e+00,-1.7896244e+00,-1.7936724e+00,-1.7978390e+00,-1.8003457e+00,-1.8015579e+00,-1.8040582e+00,-1.8058810e+00,-1.8077892e+00,-1.8110934e+00,-1.8134940e+00,-1.8154595e+00,-1.8174667e+00,-1.8192511e+00,-1.8207699e+00,-1.8225752e+00,-1.8252424e+00,-1.8276538e+00,-1.8296781e+00,-1.8303677e+00,-1.8310917e+00,-1.8322841e+00:0
-6.4531855e-01,-5.8438065e-01,-5.9374994e-01,-6.7661657e-01,-7.8263051e-01,-8.8133568e-01,-9.2156383e-01,-9.6477440e-01,-1.0010562e+00,-1.0047256e+00,-1.0015530e+00,-9.9157002e-01,-9.9840479e-01,-1.0253321e+00,-1.0423570e+00,-1.0367968e+00,-1.0339218e+00,-1.0433602e+00,-1.0385043e+00,-1.0166324e+00,-1.0150649e+00,-1.0226346e+00,-1.0478766e+00,-1.0732192e+00,-1.0760301e+00,-1.0668939e+00,-1.0553020e+00,-1.0550901e+00,-1.0738979e+00,-1.1047352e+00,-1.1093125e+00,-1.0902232e+00,-1.0679432e+00,-1.0599476e+00,-1.0558873e+00,-1.0369146e+00,-1.0043686e+00,-9.6769497e-01,-9.1791845e-01,-8.3769800e-01,-7.7509589e-01,-7.3766321e-01,-6.8285718e-01,-6.3181923e-01,-5.8658945e-01,-5.3556125e-01,-4.9531624e-01,-5.1223181e-01,-5.3193475e-01,-4.9290542e-01,-4.1273275e-01,-3.0950263e-01,-2.6234516e-01,-1.9359913e-01,-5.9438663e-02,1.2502827e-02,1.1948239e-01,2.9338307e-01,4.3290522e-01,4.3504470e-01,3.7888193e-01,4.5620222e-01,5.4730167e-01,6.2796874e-01,7.0119498e-01,6.5768087e-01,7.0689493e-01,8.2242163e-01,8.3665300e-01,8.3439249e-01,9.1779979e-01,1.0170550e+00,9.9659569e-01,9.7938127e-01,9.7058560e-01,8.8542094e-01,8.3674844e-01,7.9515949e-01,6.9250869e-01,7.2350532e-01,8.1731026e-01,8.6265017e-01,8.0559440e-01,7.1114955e-01,6.6515846e-01,6.1105875e-01,5.6114040e-01,6.0618843e-01,6.6458636e-01,6.6253028e-01,6.8404152e-01,7.1681452e-01,6.7726239e-01,5.7972208e-01,5.5525174e-01,5.9204236e-01,5.6342816e-01,5.1813008e-01,4.7962190e-01,3.8617410e-01,3.1733391e-01,2.8339897e-01,2.7588083e-01,2.7150732e-01,2.5754642e-01,2.7938427e-01,2.8026181e-01,2.5106487e-01,2.6365497e-01,2.6790959e-01,3.2427970e-01,4.0672264e-01,4.4645309e-01,5.0553541e-01,5.2754563e-01,5.5527075e-01,6.0549276e-01,6.3545710e-01,7.2916294e-01,7.9021136e-01,7.9259620e-01,7.6939084e-01,7.6048934e-01,8.3043824e-01,8.1746184e-01,7.2036942e-01,6.2344049e-01,6.0191911e-01,5.7182549e-01,5.0219356e-01,4.5334489e-01,4.0486871e-01,3.5545453e-01,3.3845924e-01,2.8785004e-01,2.3596939e-01,2.3058730e-01,2.7891305e-01,3.2678824e-01,2.9942471e-01,3.3699806e-01,4.0802590e-01,5.1609909e-01,6.3043584e-01,6.7456742e-01,7.4642374e-01,8.2280667e-01,8.8871070e-01,8.8757449e-01,8.8411123e-01,1.0113578e+00,1.0853680e+00,1.0625163e+00,1.0561426e+00,1.0556200e+00,1.0756709e+00,1.1023924e+00,1.0984825e+00,1.0019863e+00,8.9232884e-01,8.3869540e-01,7.5981445e-01,6.8737235e-01,6.9110785e-01,6.8433721e-01,6.3300623e-01,5.4629612e-01,4.7768393e-01,3.9752952e-01,3.2666683e-01,1.9118080e-01,8.4649634e-02,-3.4929793e-02,-1.8969317e-01,-2.8890682e-01,-3.5951755e-01,-3.8134691e-01,-4.0491284e-01,-3.9914281e-01,-3.6129544e-01,-3.5948042e-01,-2.5793668e-01,-1.5427691e-01,-8.7988473e-02,-3.4951338e-02,-6.2098657e-02,-1.2462244e-01,-1.4134575e-01,-1.6491726e-01,-1.8151674e-01,-6.2754023e-02,5.3182594e-03,6.8151161e-02,1.5867585e-01,2.8676819e-01,3.9522604e-01,4.3942289e-01,5.3621912e-01,6.7486576e-01,8.7338089e-01,9.9499346e-01,1.1541047e+00,1.2816508e+00,1.3099388e+00,1.4159586e+00,1.5847472e+00,1.6612085e+00,1.7361880e+00,1.7239128e+00,1.7546881e+00,1.7564572e+00,1.5750074e+00,1.4938480e+00,1.4751956e+00,1.4346480e+00,1.5110891e+00,1.5760604e+00,1.5845039e+00,1.5954975e+00,1.5852403e+00,1.6029180e+00,1.4645278e+00,1.1959152e+00,9.9207048e-01,8.3634985e-01,7.2433406e-01,6.5630867e-01,7.9011022e-01,9.4084799e-01,1.0112241e+00,1.1848086e+00,1.4053291e+00,1.3980211e+00,1.2577024e+00,1.0450696e+00,7.4585849e-01,4.8350441e-01,2.3736783e-01,-3.9288086e-02,-2.9094985e-01,-5.0341903e-01,-6.5167983e-01,-8.1246596e-01,-9.4253771e-01,-1.0473717e+00,-1.1039118e+00,-1.1399553e+00,-1.1498306e+00,-1.1492289e+00,-1.1438711e+00,-1.1255873e+00,-1.1462005e+00,-1.2008875e+00,-1.2725627e+00,-1.3646049e+00,-1.4839826e+00,-1.5804996e+00,-1.6620887e+00,-1.7206899e+00,-1.7612711e+00,-1.7907746e+00,-1.8074534e+00,-1.8200956e+00,-1.8296359e+00,-1.8366215e+00,-1.8429292e+00,-1.8483056e+00,-1.8530898e+00,-1.8571045e+00,-1.8602105e+00,-1.8639969e+00,-1.8663233e+00,-1.8686859e+00,-1.8724158e+00,-1.8752407e+00,-1.8762024e+00,-1.8783953e+00,-1.8811832e+00,-1.8840385e+00,-1.8866062e+00,-1.8882599e+00,-1.8899249e+00,-1.8920681e+00,-1.8939811e+00,-1.8961513e+00,-1.8975370e+00:0
-6.7298944e-01,-6.5267131e-01,-6.4481298e-01,-6.6140500e-01,-7.3685083e-01,-8.2065538e-01,-8.7686634e-01,-8.9894686e-01,-9.0334933e-01,-9.1281119e-01,-9.2419419e-01,-9.1513633e-01,-9.1914448e-01,-9.4678577e-01,-9.7281196e-01,-9.9865083e-01,-1.0111763e+00,-1.0040703e+00,-9.9857012e-01,-1.0072831e+00,-1.0151920e+00,-1.0183802e+00,-1.0440220e+00,-1.0618625e+00,-1.0563684e+00,-1.0329172e+00,-1.0073371e+00,-9.9511027e-01,-1.0006540e+00,-1.0123734e+00,-1.0190877e+00,-1.0256415e+00,-1.0216892e+00,-1.0224733e+00,-1.0228963e+00,-1.0052721e+00,-9.8336185e-01,-9.5900388e-01,-9.1727514e-01,-8.7014762e-01,-8.3120649e-01,-7.7572215e-01,-6.8986917e-01,-6.1452327e-01,-5.4141680e-01,-4.7318972e-01,-4.5138224e-01,-4.2213076e-01,-3.8295572e-01,-3.8310280e-01,-3.7514064e-01,-3.4593207e-01,-2.7139016e-01,-1.7846049e-01,-8.3128976e-02,1.4546242e-02,1.1370303e-01,2.6812205e-01,4.1341383e-01,4.4859661e-01,4.2907212e-01,4.7304140e-01,5.7588839e-01,6.7708695e-01,7.3940574e-01,8.0352094e-01,8.0515826e-01,7.7434071e-01,9.1376857e-01,9.7870832e-01,9.8291492e-01,1.0528849e+00,9.6615403e-01,9.0347515e-01,8.5710604e-01,7.9053296e-01,7.2487627e-01,7.0962052e-01,7.1000339e-01,7.0459282e-01,7.4442443e-01,7.6359606e-01,7.2599253e-01,6.3257849e-01,5.9695492e-01,5.8073800e-01,5.3252656e-01,5.2329171e-01,5.2471870e-01,5.6319647e-01,6.3553386e-01,6.5941268e-01,5.8228149e-01,4.9802392e-01,4.6009289e-01,4.5252160e-01,4.7354011e-01,4.2361464e-01,3.5047804e-01,3.0641516e-01,2.4004898e-01,1.9772981e-01,2.1030100e-01,2.1310962e-01,2.2811612e-01,2.2836570e-01,1.8810175e-01,1.7064349e-01,1.7283567e-01,2.2129424e-01,2.7741270e-01,3.3810117e-01,4.3046421e-01,5.0707745e-01,5.4843076e-01,6.0114239e-01,6.7323799e-01,7.0778443e-01,7.7459563e-01,8.0309482e-01,8.2156262e-01,8.6590510e-01,8.8828945e-01,9.0690955e-01,8.1390885e-01,6.9890177e-01,6.0524282e-01,5.2239834e-01,4.9040016e-01,4.4831735e-01,3.6893528e-01,3.1804063e-01,2.5846664e-01,2.0120123e-01,1.8440254e-01,1.7991558e-01,1.7401019e-01,1.4438528e-01,1.6321862e-01,2.0831071e-01,2.4233320e-01,3.2046971e-01,4.1725778e-01,5.4107559e-01,6.9586569e-01,8.0442020e-01,9.2517358e-01,9.7591227e-01,9.3894120e-01,9.6828095e-01,1.0713485e+00,1.1958439e+00,1.2064796e+00,1.1228867e+00,1.1060119e+00,1.0912554e+00,1.0597235e+00,1.0224901e+00,9.7125432e-01,9.0630879e-01,8.0271617e-01,7.3807647e-01,7.4889539e-01,6.9579177e-01,6.0970955e-01,5.7115941e-01,4.9414239e-01,4.3839002e-01,3.7960290e-01,2.3654165e-01,8.1957100e-02,-4.0570794e-02,-1.7009122e-01,-2.7882949e-01,-3.7565803e-01,-4.5176511e-01,-4.6953432e-01,-4.6322782e-01,-4.6358546e-01,-4.7250480e-01,-4.7711216e-01,-3.9019972e-01,-2.9732431e-01,-2.5954047e-01,-2.3447901e-01,-2.1454698e-01,-2.4698795e-01,-2.7961535e-01,-3.0239736e-01,-2.7924171e-01,-1.7668409e-01,-1.0880565e-01,-9.9066644e-03,1.0188969e-01,1.9739319e-01,3.7961502e-01,4.8101412e-01,5.8977729e-01,7.6261431e-01,1.0305540e+00,1.1488717e+00,1.2800819e+00,1.5369450e+00,1.6866918e+00,1.8968710e+00,2.0177648e+00,2.0058280e+00,2.0463149e+00,2.0363855e+00,2.1350270e+00,2.0971212e+00,1.9216187e+00,1.7591438e+00,1.5477574e+00,1.4735354e+00,1.5630218e+00,1.5914275e+00,1.6830290e+00,1.8209296e+00,1.8101485e+00,1.5764729e+00,1.3305255e+00,1.0886993e+00,8.2341317e-01,6.1630453e-01,5.3989662e-01,5.3581199e-01,6.2221059e-01,8.7230964e-01,1.0248150e+00,1.0379596e+00,1.2305136e+00,1.3265963e+00,1.1631811e+00,8.5269434e-01,5.0823729e-01,2.2674939e-01,-9.7626983e-03,-2.5197518e-01,-4.7667393e-01,-6.8030659e-01,-8.2091130e-01,-9.6352442e-01,-1.0720562e+00,-1.1551994e+00,-1.2115904e+00,-1.2582445e+00,-1.2876283e+00,-1.3027343e+00,-1.3123635e+00,-1.3214428e+00,-1.3391493e+00,-1.3723380e+00,-1.4182283e+00,-1.4679518e+00,-1.5249236e+00,-1.5720214e+00,-1.6102191e+00,-1.6376846e+00,-1.6564704e+00,-1.6703671e+00,-1.6799169e+00,-1.6871100e+00,-1.6932681e+00,-1.6979591e+00,-1.7013147e+00,-1.7056118e+00,-1.7093625e+00,-1.7118675e+00,-1.7128689e+00,-1.7148362e+00,-1.7173738e+00,-1.7189749e+00,-1.7212655e+00,-1.7234175e+00,-1.7241082e+00,-1.7264321e+00,-1.7288238e+00,-1.7307452e+00,-1.7325147e+00,-1.7346096e+00,-1.7364171e+00,-1.7374624e+00,-1.7387751e+00,-1.7402493e+00,-1.7416958e+00:0
-6.1848076e-01,-5.8524460e-01,-6.3195520e-01,-6.9559206e-01,-8.0242563e-01,-9.1243604e-01,-9.7640584e-01,-1.0090595e+00,-1.0179608e+00,-1.0346781e+00,-1.0460234e+00,-1.0385104e+00,-1.0329832e+00,-1.0296575e+00,-1.0216325e+00,-1.0313888e+00,-1.0332896e+00,-1.0074529e+00,-9.9806227e-01,-9.9565617e-01,-1.0099900e+00,-1.0285224e+00,-1.0462854e+00,-1.0607150e+00,-1.0618594e+00,-1.0633929e+00,-1.0602044e+00,-1.0659913e+00,-1.0815959e+00,-1.0991998e+00,-1.1116353e+00,-1.0762527e+00,-1.0574368e+00,-1.0602817e+00,-1.0296948e+00,-1.0227330e+00,-1.0095179e+00,-9.7259016e-01,-9.2600975e-01,-8.7353388e-01,-8.2168691e-01,-7.7158314e-01,-7.2172138e-01,-6.7866957e-01,-6.3495165e-01,-6.1389230e-01,-6.0907267e-01,-5.7787442e-01,-5.5610663e-01,-5.3006563e-01,-4.7312337e-01,-3.6245085e-01,-2.4636664e-01,-1.3881756e-01,2.4172237e-02,1.6803151e-01,2.6016431e-01,3.4552675e-01,4.0723329e-01,5.0245564e-01,5.5276354e-01,5.6721831e-01,7.0507795e-01,8.1432505e-01,8.2693474e-01,8.2118236e-01,8.4300777e-01,9.6029218e-01,1.0446726e+00,1.1057373e+00,1.2237549e+00,1.2062560e+00,1.1034718e+00,1.1352421e+00,1.2376344e+00,1.1127709e+00,9.3097096e-01,8.5976767e-01,8.5037476e-01,8.7495598e-01,8.8031530e-01,8.7147861e-01,8.2114995e-01,7.6683755e-01,7.2191122e-01,6.6909522e-01,6.4387356e-01,6.9801082e-01,7.3529644e-01,7.5861049e-01,8.1649999e-01,7.4758996e-01,6.2948006e-01,5.8315842e-01,6.0762806e-01,5.9060527e-01,5.0599087e-01,4.3819125e-01,4.2549233e-01,3.9567627e-01,3.1357773e-01,2.8976359e-01,2.9290426e-01,2.9275833e-01,2.9319977e-01,2.8633961e-01,2.7255311e-01,2.6394565e-01,2.9698111e-01,3.5374673e-01,3.9059787e-01,4.7044068e-01,5.6804883e-01,5.8965346e-01,6.0387856e-01,6.0426375e-01,6.3227797e-01,6.9287765e-01,7.5989958e-01,8.0843449e-01,7.6468383e-01,7.7922977e-01,8.4005684e-01,7.9796358e-01,7.3662477e-01,7.0871781e-01,6.3665376e-01,5.6846381e-01,5.5695539e-01,5.0542460e-01,4.3702265e-01,3.9226279e-01,3.9309160e-01,3.6079630e-01,2.7410154e-01,2.3394189e-01,2.2366004e-01,2.4554615e-01,2.5586897e-01,2.7271901e-01,3.2640227e-01,3.7226250e-01,4.6822934e-01,6.0015850e-01,7.2423860e-01,8.4240225e-01,9.1112629e-01,9.3272328e-01,9.0218156e-01,9.4212350e-01,1.0148069e+00,9.8917126e-01,1.0256625e+00,1.0268632e+00,9.8577010e-01,1.0411250e+00,1.0945075e+00,9.9521984e-01,8.9421247e-01,8.4104996e-01,7.4457138e-01,7.1424450e-01,6.7347740e-01,6.4114056e-01,6.2304822e-01,5.7572537e-01,4.8502188e-01,4.2858314e-01,3.5718999e-01,2.4623359e-01,8.6190382e-02,-3.4302356e-02,-1.5480080e-01,-2.9264675e-01,-3.9446136e-01,-4.5399011e-01,-4.7654416e-01,-4.7703866e-01,-4.5229986e-01,-4.5814763e-01,-4.6392420e-01,-3.9559151e-01,-3.0593145e-01,-2.2948922e-01,-1.9748898e-01,-2.0959561e-01,-2.4785106e-01,-2.6298256e-01,-2.8413684e-01,-2.7857854e-01,-1.3635852e-01,-7.1957542e-02,-1.8938332e-02,5.4493069e-02,2.3338578e-01,3.7792143e-01,4.0868405e-01,5.3603604e-01,6.4732230e-01,8.2593900e-01,9.7918937e-01,1.1658140e+00,1.3500977e+00,1.4879276e+00,1.5303653e+00,1.5074537e+00,1.6248774e+00,1.7879253e+00,1.8939306e+00,1.8404163e+00,1.6606085e+00,1.5137646e+00,1.4134528e+00,1.4065425e+00,1.3581804e+00,1.4341321e+00,1.5045115e+00,1.4393157e+00,1.4105919e+00,1.4706058e+00,1.3782340e+00,1.2154315e+00,1.1941361e+00,1.0669153e+00,8.0762519e-01,6.6385081e-01,6.0623823e-01,6.7181635e-01,7.7249295e-01,9.2910557e-01,1.1578428e+00,1.3380429e+00,1.2977409e+00,1.1518998e+00,8.9934359e-01,6.0061284e-01,4.4921531e-01,2.4932509e-01,-1.3148298e-02,-2.6387435e-01,-4.5299666e-01,-5.9423247e-01,-7.7495965e-01,-9.0441048e-01,-1.0044794e+00,-1.0646076e+00,-1.0939009e+00,-1.1073536e+00,-1.1071963e+00,-1.1005293e+00,-1.1054245e+00,-1.1236059e+00,-1.1670907e+00,-1.2446719e+00,-1.3414287e+00,-1.4631490e+00,-1.5587734e+00,-1.6404253e+00,-1.6998401e+00,-1.7392656e+00,-1.7670948e+00,-1.7850814e+00,-1.7987620e+00,-1.8086015e+00,-1.8158314e+00,-1.8215127e+00,-1.8276237e+00,-1.8320294e+00,-1.8355128e+00,-1.8383013e+00,-1.8405764e+00,-1.8425275e+00,-1.8448918e+00,-1.8477627e+00,-1.8504647e+00,-1.8523200e+00,-1.8544655e+00,-1.8562345e+00,-1.8583913e+00,-1.8608136e+00,-1.8623078e+00,-1.8637316e+00,-1.8652529e+00,-1.8665835e+00,-1.8681628e+00,-1.8698537e+00:0
-6.1427703e-01,-5.9355475e-01,-5.9201629e-01,-6.5801173e-01,-7.5773855e-01,-8.3896355e-01,-9.0983817e-01,-9.6518466e-01,-9.7911588e-01,-9.8882543e-01,-9.9106979e-01,-9.6586834e-01,-9.6893202e-01,-9.7856629e-01,-9.7717235e-01,-9.8415136e-01,-9.9829061e-01,-1.0057719e+00,-9.9197496e-01,-9.7875839e-01,-9.7956167e-01,-9.8906331e-01,-1.0062940e+00,-1.0291997e+00,-1.0431756e+00,-1.0376779e+00,-1.0265168e+00,-1.0301903e+00,-1.0451982e+00,-1.0585046e+00,-1.0650583e+00,-1.0674404e+00,-1.0650936e+00,-1.0523615e+00,-1.0324319e+00,-1.0089176e+00,-9.9135154e-01,-9.5814326e-01,-9.1207209e-01,-8.7425639e-01,-8.3015736e-01,-7.8734433e-01,-7.3938562e-01,-6.7255637e-01,-6.0106203e-01,-5.6616460e-01,-5.6142904e-01,-5.5492960e-01,-5.3831216e-01,-4.8686080e-01,-4.5134826e-01,-3.9874308e-01,-2.8628846e-01,-1.8839183e-01,-9.3321914e-02,2.6097585e-02,1.9723673e-01,4.1127811e-01,5.0579272e-01,5.7349145e-01,6.4216044e-01,6.6971418e-01,6.6895533e-01,6.6059898e-01,7.2629012e-01,8.1343961e-01,9.3100557e-01,1.0094449e+00,9.9333153e-01,1.0202285e+00,1.1479875e+00,1.1717974e+00,1.1056165e+00,1.0573937e+00,1.0429054e+00,9.7197214e-01,8.9617793e-01,8.4470862e-01,7.7789744e-01,7.9927355e-01,9.4010148e-01,9.4882597e-01,8.3202952e-01,7.6436120e-01,6.7568502e-01,6.1186437e-01,5.6960518e-01,5.9388003e-01,6.5549258e-01,6.7793207e-01,7.1801175e-01,7.8126016e-01,6.9562691e-01,5.7184583e-01,5.0499078e-01,4.7990490e-01,4.6625263e-01,4.0864047e-01,3.8374445e-01,3.0425125e-01,2.3944429e-01,2.4113525e-01,2.2356877e-01,2.0221600e-01,2.2417031e-01,2.2330464e-01,2.0585631e-01,1.9547273e-01,2.2068316e-01,2.8514328e-01,3.1677954e-01,4.1537072e-01,4.6747254e-01,4.9502247e-01,5.2788448e-01,5.4185889e-01,6.3274239e-01,6.6654177e-01,7.3228699e-01,7.6918203e-01,7.2332001e-01,7.2516783e-01,7.5743312e-01,7.7487449e-01,7.5528852e-01,6.7781627e-01,5.8113843e-01,5.2029585e-01,4.5739091e-01,4.1741501e-01,4.1112270e-01,3.8499364e-01,3.0310416e-01,2.3974905e-01,2.0124923e-01,1.9666245e-01,2.2123678e-01,2.0246229e-01,1.9339399e-01,2.1082515e-01,2.3303405e-01,3.1519878e-01,4.5165727e-01,5.9358852e-01,6.9430983e-01,7.9531592e-01,8.8758831e-01,9.3139325e-01,9.3754553e-01,9.2506144e-01,9.8927650e-01,1.0713846e+00,1.1430289e+00,1.0723125e+00,1.0143347e+00,1.0237046e+00,1.0374653e+00,1.0123654e+00,9.5379167e-01,8.9481665e-01,7.4679113e-01,6.4918983e-01,6.2340334e-01,5.5460363e-01,5.4428850e-01,5.3478248e-01,4.4594720e-01,3.7415102e-01,2.6993067e-01,1.8191415e-01,3.3864401e-02,-8.9438899e-02,-2.1751849e-01,-3.2699998e-01,-3.8675540e-01,-4.4047332e-01,-4.7471906e-01,-4.8514696e-01,-4.8303928e-01,-4.7621219e-01,-4.6713570e-01,-3.9695496e-01,-3.0139447e-01,-2.5602661e-01,-2.3755912e-01,-1.9887191e-01,-2.2132206e-01,-2.6308922e-01,-2.9552956e-01,-3.0085824e-01,-2.1419247e-01,-1.1905612e-01,-9.8487519e-03,9.8337202e-02,1.9438264e-01,3.2485807e-01,4.4554460e-01,5.9675229e-01,7.2029616e-01,9.0808629e-01,1.0857253e+00,1.2115634e+00,1.2962558e+00,1.4076332e+00,1.5867637e+00,1.7423674e+00,1.7918691e+00,1.9587413e+00,1.9557708e+00,1.8574587e+00,1.8647199e+00,1.6629089e+00,1.5192021e+00,1.5175177e+00,1.5392089e+00,1.5446791e+00,1.5261914e+00,1.6711148e+00,1.7261321e+00,1.7282087e+00,1.7268454e+00,1.5081253e+00,1.2317211e+00,1.0279673e+00,8.3788412e-01,6.8332415e-01,6.5401336e-01,7.4938523e-01,9.0400074e-01,1.0368680e+00,1.1382698e+00,1.3519240e+00,1.3993720e+00,1.1914527e+00,9.0754198e-01,5.3584833e-01,2.6417358e-01,6.0131925e-02,-1.7265084e-01,-3.8907762e-01,-5.9970411e-01,-7.4217698e-01,-8.9122919e-01,-9.9996933e-01,-1.0868652e+00,-1.1452030e+00,-1.1769083e+00,-1.1942484e+00,-1.2066427e+00,-1.2103813e+00,-1.2087516e+00,-1.2211572e+00,-1.2633435e+00,-1.3309273e+00,-1.4021648e+00,-1.4874757e+00,-1.5573888e+00,-1.6160546e+00,-1.6592836e+00,-1.6890177e+00,-1.7102435e+00,-1.7242412e+00,-1.7351433e+00,-1.7416293e+00,-1.7467817e+00,-1.7517610e+00,-1.7563144e+00,-1.7607493e+00,-1.7642376e+00,-1.7658462e+00,-1.7682133e+00,-1.7702954e+00,-1.7721002e+00,-1.7748764e+00,-1.7775568e+00,-1.7789038e+00,-1.7804295e+00,-1.7824147e+00,-1.7840349e+00,-1.7853651e+00,-1.7865642e+00,-1.7892147e+00,-1.7911070e+00,-1.7918251e+00,-1.7933111e+00,-1.7945472e+00:0
-5.8432694e-01,-5.6087781e-01,-5.8063746e-01,-6.5223592e-01,-7.4986651e-01,-8.3602688e-01,-8.8269054e-01,-9.1703879e-01,-9.3241402e-01,-9.3592519e-01,-9.4930786e-01,-9.5465127e-01,-9.6022209e-01,-9.7704852e-01,-9.8262942e-01,-9.7528157e-01,-9.7096838e-01,-9.6639116e-01,-9.4998908e-01,-9.4051141e-01,-9.4617422e-01,-9.5796216e-01,-9.7125057e-01,-9.8649126e-01,-9.9948055e-01,-9.9730848e-01,-9.8511602e-01,-9.8691164e-01,-1.0071916e+00,-1.0327075e+00,-1.0434168e+00,-1.0243197e+00,-1.0085833e+00,-1.0149424e+00,-1.0050994e+00,-9.8248512e-01,-9.5951769e-01,-9.3394240e-01,-8.9041163e-01,-8.3217297e-01,-7.9630518e-01,-7.7479536e-01,-7.3773384e-01,-6.8770270e-01,-6.4264766e-01,-6.2557367e-01,-6.3250602e-01,-6.2030227e-01,-5.8314297e-01,-5.2127341e-01,-4.4907000e-01,-3.8630079e-01,-3.1627495e-01,-2.0835994e-01,-4.4642690e-02,1.1118171e-01,2.6496141e-01,4.2752520e-01,5.1103851e-01,6.1583848e-01,7.1215789e-01,7.3084797e-01,7.3922755e-01,7.6483121e-01,8.8159987e-01,9.7518298e-01,9.8404808e-01,1.0080819e+00,1.1387871e+00,1.2371849e+00,1.2327625e+00,1.2335305e+00,1.2387584e+00,1.2441375e+00,1.1983139e+00,1.1434738e+00,1.0013281e+00,8.6624265e-01,8.6060898e-01,8.6535689e-01,9.1098362e-01,9.2919383e-01,8.1168996e-01,7.5482684e-01,6.7327359e-01,5.4125478e-01,5.5566844e-01,6.0576501e-01,5.6739277e-01,5.8115495e-01,5.8541140e-01,5.4429432e-01,4.9347168e-01,4.1745372e-01,3.7469965e-01,3.7946159e-01,3.1385205e-01,2.5146250e-01,2.2407663e-01,1.6955598e-01,1.3084069e-01,1.0862113e-01,1.0592129e-01,1.3409286e-01,1.7054028e-01,1.4985658e-01,1.4946594e-01,1.7511964e-01,1.5717468e-01,1.7742091e-01,2.5416310e-01,3.0921885e-01,3.4785009e-01,3.9071170e-01,4.4317010e-01,4.8049230e-01,4.9419103e-01,5.3780585e-01,5.8928194e-01,5.9546198e-01,5.8880481e-01,6.1131906e-01,6.1614095e-01,5.9905705e-01,5.8504623e-01,5.5510635e-01,4.7600995e-01,4.1105067e-01,3.9027164e-01,3.5059280e-01,2.9714536e-01,2.5179960e-01,2.4011202e-01,2.2545294e-01,2.0735805e-01,1.9407818e-01,1.7588383e-01,2.0131620e-01,2.2009505e-01,2.5627463e-01,3.1138498e-01,3.4571752e-01,4.2664417e-01,5.9373058e-01,7.6775421e-01,8.4199775e-01,9.5911236e-01,1.0598112e+00,1.0115944e+00,9.5266904e-01,1.0399130e+00,1.1633556e+00,1.1840152e+00,1.1302578e+00,1.0887263e+00,1.0739480e+00,1.0878262e+00,1.0850065e+00,1.0084135e+00,9.0570581e-01,8.1373757e-01,7.3924234e-01,6.8191431e-01,6.0854432e-01,5.6384896e-01,5.4673714e-01,4.9697080e-01,4.5667023e-01,3.3679782e-01,2.0385939e-01,8.0655796e-02,-3.9154840e-02,-1.7684805e-01,-2.7785939e-01,-3.6523378e-01,-4.3584229e-01,-4.5366095e-01,-4.4806099e-01,-4.3728358e-01,-4.4157542e-01,-4.5063514e-01,-3.9266799e-01,-3.4068793e-01,-3.1269560e-01,-2.9120546e-01,-2.7394462e-01,-2.7855875e-01,-2.9070378e-01,-2.8285593e-01,-2.6984909e-01,-1.8813385e-01,-9.5580336e-02,2.4142594e-02,1.2286547e-01,2.3162994e-01,3.7374708e-01,4.6112833e-01,6.3245975e-01,7.6679477e-01,9.8045454e-01,1.1400243e+00,1.2914282e+00,1.4440639e+00,1.6044669e+00,1.7989047e+00,1.9239187e+00,2.0212058e+00,2.1171407e+00,2.1771109e+00,2.1602473e+00,2.0435630e+00,1.8917938e+00,1.7998625e+00,1.6395228e+00,1.5470640e+00,1.6435010e+00,1.6573366e+00,1.5664007e+00,1.5283266e+00,1.5452200e+00,1.5469653e+00,1.4161947e+00,1.1306523e+00,8.7804843e-01,7.4718232e-01,6.3523128e-01,5.5595794e-01,6.3278800e-01,7.1704125e-01,8.0717558e-01,9.3062490e-01,1.0899525e+00,1.1438971e+00,9.6168392e-01,6.8509280e-01,3.7158796e-01,1.1156168e-01,-8.6287538e-02,-2.6510865e-01,-4.2072287e-01,-6.1055523e-01,-7.5940809e-01,-8.9967865e-01,-1.0133741e+00,-1.1120411e+00,-1.1736058e+00,-1.2147259e+00,-1.2374824e+00,-1.2455389e+00,-1.2506003e+00,-1.2564450e+00,-1.2729734e+00,-1.3081615e+00,-1.3620623e+00,-1.4249703e+00,-1.4969208e+00,-1.5541363e+00,-1.6014162e+00,-1.6354394e+00,-1.6583472e+00,-1.6741769e+00,-1.6846503e+00,-1.6930115e+00,-1.6997031e+00,-1.7048615e+00,-1.7085226e+00,-1.7126720e+00,-1.7164736e+00,-1.7195552e+00,-1.7218770e+00,-1.7239988e+00,-1.7256883e+00,-1.7274242e+00,-1.7300132e+00,-1.7324891e+00,-1.7337905e+00,-1.7352576e+00,-1.7369318e+00,-1.7390034e+00,-1.7411594e+00,-1.7427409e+00,-1.7439239e+00,-1.7449517e+00,-1.7461427e+00,-1.7473527e+00,-1.7482243e+00:0
-5.1973881e-01,-4.7788275e-01,-4.9268718e-01,-5.4664986e-01,-6.1995953e-01,-7.3531553e-01,-8.1836559e-01,-8.5881368e-01,-8.8165407e-01,-8.9001838e-01,-8.9391573e-01,-8.9494972e-01,-8.9164349e-01,-9.0922861e-01,-9.4661508e-01,-9.8214795e-01,-9.9386890e-01,-9.9364411e-01,-1.0050187e+00,-1.0036510e+00,-9.9423152e-01,-1.0042822e+00,-1.0415388e+00,-1.0812552e+00,-1.1159820e+00,-1.1274382e+00,-1.1028130e+00,-1.0907762e+00,-1.1069408e+00,-1.1222267e+00,-1.1243753e+00,-1.1084805e+00,-1.0907268e+00,-1.0942234e+00,-1.0873448e+00,-1.0584987e+00,-1.0363628e+00,-1.0007961e+00,-9.4565155e-01,-8.7037529e-01,-7.9564702e-01,-7.5156268e-01,-6.7700044e-01,-5.7082656e-01,-5.0742604e-01,-4.9965177e-01,-5.0553744e-01,-5.2093095e-01,-5.1330287e-01,-4.8280419e-01,-4.6599017e-01,-4.0878265e-01,-3.5982262e-01,-2.5926854e-01,-9.2216728e-02,2.1707894e-02,1.3926518e-01,2.7099625e-01,3.7103793e-01,4.3932345e-01,5.1143573e-01,4.9730770e-01,5.3717794e-01,6.7942635e-01,6.9553746e-01,7.0636176e-01,7.5304967e-01,7.6900754e-01,7.7902275e-01,7.4233692e-01,7.7425421e-01,8.7155126e-01,9.0794159e-01,8.6691816e-01,8.4939849e-01,7.8284187e-01,6.8590194e-01,6.4188843e-01,5.9084130e-01,6.7153742e-01,7.1613714e-01,7.3096295e-01,7.7857031e-01,6.8948014e-01,6.0276458e-01,5.8113507e-01,5.4869010e-01,5.5434323e-01,6.1519321e-01,6.5226734e-01,7.1429119e-01,7.4779894e-01,7.3509846e-01,6.9131559e-01,6.5119954e-01,6.1991780e-01,5.8159361e-01,5.3135974e-01,5.1281264e-01,4.5829289e-01,3.3909795e-01,2.5811876e-01,2.3904469e-01,2.3289612e-01,2.1140720e-01,2.1093207e-01,2.3968991e-01,2.2952444e-01,1.9716928e-01,2.5186127e-01,3.5954440e-01,4.5416419e-01,5.1323057e-01,5.3187728e-01,5.7084777e-01,6.7457849e-01,7.1890279e-01,7.4771271e-01,8.1630197e-01,8.5398357e-01,8.7477580e-01,9.0391477e-01,9.3897406e-01,9.3787437e-01,9.2325209e-01,8.3632296e-01,7.1961812e-01,6.3804793e-01,5.4067814e-01,4.8009188e-01,4.4339196e-01,3.8483918e-01,3.8658982e-01,3.6982752e-01,3.2880265e-01,2.6634189e-01,2.4378493e-01,2.5316699e-01,2.0048842e-01,2.2229971e-01,2.7137858e-01,3.0116731e-01,3.8090886e-01,5.0004408e-01,6.4967775e-01,7.7935038e-01,8.4620166e-01,8.9628992e-01,8.6333792e-01,8.4499208e-01,9.3622860e-01,1.0026449e+00,1.0132887e+00,9.9487837e-01,1.0135897e+00,1.0713794e+00,1.0115746e+00,9.1933826e-01,8.5909002e-01,7.8314704e-01,7.2743814e-01,6.6075694e-01,5.7668436e-01,5.9559838e-01,6.1275710e-01,5.8113340e-01,5.7451890e-01,5.3587603e-01,4.3792863e-01,3.1499077e-01,1.8485280e-01,6.0604690e-02,-7.8674311e-02,-1.9493662e-01,-2.7315041e-01,-3.3370800e-01,-3.5631680e-01,-3.5878862e-01,-3.3733159e-01,-3.2537857e-01,-3.4080731e-01,-2.5005859e-01,-1.2421535e-01,-7.4725245e-02,-6.6004646e-02,-3.2841119e-02,-6.6248185e-02,-9.6981692e-02,-1.1230103e-01,-1.2321133e-01,-5.4362051e-02,3.1796685e-02,1.7114042e-01,3.2918104e-01,3.2767609e-01,3.2490196e-01,4.3297602e-01,5.7440352e-01,6.6455551e-01,8.3296405e-01,9.7571364e-01,1.0929554e+00,1.1672810e+00,1.2387970e+00,1.3994329e+00,1.5113232e+00,1.5244182e+00,1.4795706e+00,1.4394364e+00,1.3959607e+00,1.4187667e+00,1.4448561e+00,1.3509802e+00,1.2828178e+00,1.3768843e+00,1.3896981e+00,1.4144624e+00,1.6770375e+00,1.6201117e+00,1.6659887e+00,1.8320826e+00,1.8242258e+00,1.6815023e+00,1.3661187e+00,1.1070131e+00,9.6164473e-01,9.5672927e-01,1.0007815e+00,1.1559375e+00,1.2854116e+00,1.3380279e+00,1.5427143e+00,1.6258492e+00,1.5911673e+00,1.3142132e+00,7.3723800e-01,3.1432860e-01,8.1547888e-02,-1.7396130e-01,-4.0910478e-01,-6.2814181e-01,-7.9167586e-01,-9.5590207e-01,-1.0842884e+00,-1.1846736e+00,-1.2368222e+00,-1.2646269e+00,-1.2763662e+00,-1.2767657e+00,-1.2680517e+00,-1.2605160e+00,-1.2717905e+00,-1.3066718e+00,-1.3692746e+00,-1.4441218e+00,-1.5372359e+00,-1.6144373e+00,-1.6794039e+00,-1.7252304e+00,-1.7553457e+00,-1.7767254e+00,-1.7903401e+00,-1.8005396e+00,-1.8080297e+00,-1.8146375e+00,-1.8206318e+00,-1.8255808e+00,-1.8285963e+00,-1.8320983e+00,-1.8357082e+00,-1.8373825e+00,-1.8388871e+00,-1.8415657e+00,-1.8444545e+00,-1.8470310e+00,-1.8487664e+00,-1.8509510e+00,-1.8538100e+00,-1.8565163e+00,-1.8586370e+00,-1.8608196e+00,-1.8630136e+00,-1.8646391e+00,-1.8663786e+00,-1.8678753e+00,-1.8686068e+00:1
-4.0727383e-01,-3.8262992e-01,-4.4092884e-01,-5.2708256e-01,-5.9484591e-01,-6.9076724e-01,-7.7191679e-01,-7.9735013e-01,-8.2758478e-01,-8.4397153e-01,-8.5457335e-01,-8.5666829e-01,-8.5052255e-01,-8.6269171e-01,-8.7542081e-01,-8.9727555e-01,-9.0475778e-01,-8.9757468e-01,-8.9358691e-01,-8.9440764e-01,-9.0743107e-01,-9.3228936e-01,-9.6256848e-01,-9.8720834e-01,-1.0069849e+00,-1.0218726e+00,-1.0132979e+00,-9.9138190e-01,-1.0049536e+00,-1.0301450e+00,-1.0222198e+00,-9.9766014e-01,-9.8919100e-01,-9.8768682e-01,-9.8473013e-01,-9.7138077e-01,-9.4951495e-01,-9.2007603e-01,-8.6499566e-01,-8.1567941e-01,-7.6115912e-01,-6.8959274e-01,-6.2700903e-01,-5.4791999e-01,-4.9227685e-01,-4.8455133e-01,-4.9225768e-01,-5.1374652e-01,-5.1308868e-01,-4.8036249e-01,-4.3872969e-01,-3.9048135e-01,-3.2013379e-01,-2.3236616e-01,-9.1802190e-02,6.5427596e-02,1.7134396e-01,3.4029616e-01,5.1025026e-01,5.5488601e-01,5.9263434e-01,6.0423938e-01,6.4558129e-01,6.9009113e-01,6.6012746e-01,7.1261748e-01,7.6356456e-01,8.8354846e-01,1.0165970e+00,1.0248195e+00,1.1113270e+00,1.1350141e+00,1.1600372e+00,1.1839020e+00,1.1060390e+00,9.4866577e-01,8.4685426e-01,8.3982356e-01,8.3687690e-01,8.4206477e-01,8.3314289e-01,8.9719635e-01,8.9317714e-01,8.2275487e-01,7.3317166e-01,6.8631835e-01,6.5742737e-01,6.0431813e-01,6.5749430e-01,7.4143315e-01,8.0413903e-01,7.7404002e-01,7.0528242e-01,6.4123615e-01,5.7923752e-01,5.5701928e-01,5.2286871e-01,4.9585245e-01,4.6987385e-01,4.2145664e-01,3.3550952e-01,2.5222656e-01,2.4188869e-01,2.5266238e-01,2.4718750e-01,2.2333274e-01,1.9293475e-01,1.9468924e-01,2.1162364e-01,2.7831639e-01,4.0501749e-01,5.2933394e-01,5.9028533e-01,5.9739253e-01,6.0573922e-01,6.1693659e-01,6.6150722e-01,7.1965627e-01,7.7066353e-01,8.1627197e-01,8.1510091e-01,8.1758930e-01,8.5276600e-01,8.6454906e-01,8.6207055e-01,8.6113918e-01,7.6264517e-01,5.8664939e-01,4.9141165e-01,4.6042244e-01,3.9399423e-01,3.2948310e-01,2.7141894e-01,2.3496459e-01,2.5994714e-01,2.6327243e-01,2.0328549e-01,1.7047202e-01,1.6443198e-01,1.4408246e-01,1.9436855e-01,2.7489798e-01,3.6308541e-01,4.9821164e-01,6.1441901e-01,7.0639314e-01,7.7575993e-01,8.3031810e-01,8.3095363e-01,8.4104597e-01,8.9381806e-01,9.2999245e-01,9.7831670e-01,9.2027424e-01,8.7864175e-01,9.2961742e-01,9.4916178e-01,9.0427376e-01,8.0938185e-01,6.7329971e-01,5.6969837e-01,5.4943883e-01,5.6444776e-01,5.6137744e-01,5.0102970e-01,4.2066884e-01,3.9389976e-01,4.1577471e-01,3.1829965e-01,2.3452338e-01,1.1072089e-01,-3.6221777e-02,-1.3938850e-01,-2.4932766e-01,-3.4327936e-01,-4.0379942e-01,-3.9530947e-01,-3.9578361e-01,-4.0255441e-01,-3.8388961e-01,-4.0565422e-01,-3.5298409e-01,-2.5169912e-01,-1.9256586e-01,-1.4902691e-01,-1.1668997e-01,-1.7203414e-01,-2.3595734e-01,-2.9843102e-01,-3.2731885e-01,-2.0901968e-01,-9.3082241e-02,3.2817137e-02,1.0544558e-01,1.7683350e-01,2.6757115e-01,3.0810595e-01,3.9258303e-01,4.7703301e-01,6.6603710e-01,8.5071492e-01,9.7123584e-01,1.1182990e+00,1.2847239e+00,1.4004946e+00,1.5530840e+00,1.6314851e+00,1.5967152e+00,1.5956061e+00,1.5456086e+00,1.4093129e+00,1.3138230e+00,1.1876143e+00,1.1375414e+00,1.2340757e+00,1.3907120e+00,1.4032779e+00,1.4714115e+00,1.5208578e+00,1.8262565e+00,1.9937268e+00,1.7929727e+00,1.5527447e+00,1.2861609e+00,1.1067361e+00,9.3043321e-01,8.0236343e-01,9.3286845e-01,1.0979742e+00,1.1474450e+00,1.2589919e+00,1.6950940e+00,1.9097135e+00,1.5998169e+00,1.1715978e+00,7.4315306e-01,3.7700413e-01,8.6087769e-02,-1.6359254e-01,-3.7168317e-01,-5.8431536e-01,-7.4573203e-01,-9.1374015e-01,-1.0331069e+00,-1.1294763e+00,-1.1908127e+00,-1.2333586e+00,-1.2361530e+00,-1.2215701e+00,-1.2113039e+00,-1.1986136e+00,-1.2099549e+00,-1.2429989e+00,-1.3073518e+00,-1.3981116e+00,-1.5153536e+00,-1.6096477e+00,-1.6898235e+00,-1.7481867e+00,-1.7865674e+00,-1.8152549e+00,-1.8346865e+00,-1.8466612e+00,-1.8553897e+00,-1.8648135e+00,-1.8716397e+00,-1.8775820e+00,-1.8830678e+00,-1.8876112e+00,-1.8907737e+00,-1.8939634e+00,-1.8970520e+00,-1.8998215e+00,-1.9035037e+00,-1.9072286e+00,-1.9095264e+00,-1.9122849e+00,-1.9152754e+00,-1.9178391e+00,-1.9209708e+00,-1.9240658e+00,-1.9268692e+00,-1.9293375e+00,-1.9309771e+00,-1.9328453e+00,-1.9341239e+00:1
-5.4327633e-01,-5.0546034e-01,-5.0130697e-01,-5.4671129e-01,-6.3468499e-01,-7.1180884e-01,-7.8801404e-01,-8.5518225e-01,-8.9254199e-01,-9.0711280e-01,-8.8818139e-01,-8.6759001e-01,-8.6377982e-01,-8.6816373e-01,-9.1614505e-01,-9.7108193e-01,-9.8124428e-01,-9.8951457e-01,-1.0078745e+00,-1.0063362e+00,-1.0047009e+00,-1.0259927e+00,-1.0548509e+00,-1.0813099e+00,-1.1007868e+00,-1.0989590e+00,-1.0879175e+00,-1.0758465e+00,-1.0721559e+00,-1.0892150e+00,-1.0965470e+00,-1.0906176e+00,-1.0877201e+00,-1.0779942e+00,-1.0584602e+00,-1.0474026e+00,-1.0437387e+00,-1.0071276e+00,-9.4718087e-01,-8.9963249e-01,-8.5593733e-01,-7.8937826e-01,-6.6838468e-01,-5.5578729e-01,-4.9717012e-01,-4.7026724e-01,-4.7460002e-01,-4.5520558e-01,-4.5556880e-01,-4.7461614e-01,-4.5485305e-01,-4.0923298e-01,-3.6060492e-01,-2.7111337e-01,-1.7186632e-01,-5.9013947e-02,7.8722632e-02,2.3680260e-01,4.1707241e-01,4.5577851e-01,4.4960256e-01,4.6165676e-01,4.8582984e-01,5.6926642e-01,6.5199465e-01,6.9779320e-01,7.1656606e-01,7.8330133e-01,7.5936597e-01,8.0154236e-01,9.2704842e-01,9.0454887e-01,8.9023622e-01,8.2990969e-01,7.5129756e-01,6.1604494e-01,5.5702030e-01,5.6358185e-01,5.6153638e-01,6.5351281e-01,7.4414638e-01,7.0645680e-01,6.5359876e-01,6.8396042e-01,6.4635197e-01,5.5875678e-01,5.4302938e-01,5.5846853e-01,6.1420300e-01,7.2355674e-01,7.5000902e-01,7.7993384e-01,7.4368807e-01,6.8210585e-01,7.2909765e-01,7.0771300e-01,6.3863558e-01,5.5166248e-01,4.9989798e-01,4.5453515e-01,3.4855886e-01,2.4731173e-01,2.1987959e-01,2.0349118e-01,1.6763327e-01,1.6939050e-01,1.3589814e-01,1.2991905e-01,1.6696744e-01,2.2252117e-01,3.2958288e-01,4.2699446e-01,4.8857648e-01,5.7283776e-01,6.6494707e-01,7.1643174e-01,7.4991197e-01,8.3461564e-01,8.8435777e-01,8.8051924e-01,9.4633966e-01,1.0197544e+00,1.0151152e+00,9.7499904e-01,1.0054596e+00,9.3311295e-01,7.7075453e-01,6.6161079e-01,5.7616725e-01,4.6712836e-01,3.9206466e-01,3.8774031e-01,3.6629815e-01,3.0064624e-01,2.5456889e-01,2.1280367e-01,1.7156484e-01,1.7117657e-01,1.6538766e-01,1.9235133e-01,2.6278856e-01,3.1418461e-01,4.1206712e-01,5.4444947e-01,6.5624897e-01,7.3113316e-01,8.4529369e-01,9.7726221e-01,9.0424521e-01,8.3218785e-01,8.7337503e-01,9.3360247e-01,1.0394174e+00,1.0755350e+00,1.0282863e+00,9.5387737e-01,9.4019102e-01,9.2154858e-01,8.3010542e-01,7.6635624e-01,6.9968679e-01,6.6814102e-01,6.4338199e-01,6.0714598e-01,5.6747963e-01,5.7872473e-01,5.3143257e-01,4.3472759e-01,3.2769761e-01,2.4971846e-01,1.5974457e-01,3.7439540e-02,-8.8849532e-02,-2.4425238e-01,-3.5100264e-01,-3.9423755e-01,-4.0482247e-01,-3.8379835e-01,-3.9557796e-01,-4.0847749e-01,-3.7375769e-01,-2.4907848e-01,-1.4688825e-01,-6.4440363e-02,-1.6627561e-02,-1.0105757e-02,-4.6162573e-02,-1.3696352e-01,-1.9795980e-01,-2.2773633e-01,-1.5349590e-01,-2.0018159e-02,1.3249091e-01,2.4010406e-01,2.5440952e-01,3.4178855e-01,4.3559973e-01,5.4429636e-01,6.5660304e-01,8.6732057e-01,1.0592223e+00,1.1936686e+00,1.3052990e+00,1.4141138e+00,1.4526048e+00,1.5271680e+00,1.7066685e+00,1.7875457e+00,1.7791830e+00,1.6590941e+00,1.5167571e+00,1.4539613e+00,1.4533121e+00,1.3338973e+00,1.3138113e+00,1.5183793e+00,1.5135418e+00,1.5870895e+00,1.6326932e+00,1.7295907e+00,1.9077721e+00,1.7638450e+00,1.4588408e+00,1.2175272e+00,1.0367111e+00,9.3689654e-01,9.0610256e-01,9.9085911e-01,1.1428086e+00,1.2763163e+00,1.4138636e+00,1.6407842e+00,1.6979027e+00,1.4463022e+00,1.0822626e+00,6.1025254e-01,2.1202416e-01,-6.3913258e-02,-3.3266622e-01,-5.5388599e-01,-7.6596056e-01,-9.1786232e-01,-1.0535790e+00,-1.1493712e+00,-1.2296629e+00,-1.2804556e+00,-1.3040734e+00,-1.3074540e+00,-1.3098826e+00,-1.3047109e+00,-1.2936223e+00,-1.3046670e+00,-1.3313936e+00,-1.3806267e+00,-1.4473557e+00,-1.5259275e+00,-1.5914489e+00,-1.6443294e+00,-1.6822968e+00,-1.7088459e+00,-1.7269218e+00,-1.7383745e+00,-1.7480336e+00,-1.7550760e+00,-1.7596992e+00,-1.7636854e+00,-1.7682782e+00,-1.7729197e+00,-1.7756639e+00,-1.7775705e+00,-1.7794356e+00,-1.7813984e+00,-1.7838403e+00,-1.7861679e+00,-1.7884810e+00,-1.7902534e+00,-1.7927812e+00,-1.7953103e+00,-1.7972741e+00,-1.7993412e+00,-1.8018370e+00,-1.8040305e+00,-1.8058287e+00,-1.8073076e+00,-1.8088298e+00,-1.8096394e+00:1
-5.5977161e-01,-5.1515581e-01,-5.0487576e-01,-5.6351049e-01,-6.5886079e-01,-7.4356717e-01,-8.2699006e-01,-8.8457833e-01,-9.0271497e-01,-9.0874414e-01,-9.0482096e-01,-8.9437569e-01,-8.9180433e-01,-9.0589945e-01,-9.3950112e-01,-9.7512148e-01,-9.9255645e-01,-9.9337221e-01,-1.0009119e+00,-1.0068533e+00,-1.0121176e+00,-1.0286659e+00,-1.0558988e+00,-1.0873980e+00,-1.1045450e+00,-1.1032026e+00,-1.0850365e+00,-1.0746337e+00,-1.0874439e+00,-1.1052314e+00,-1.1019224e+00,-1.0907826e+00,-1.0836016e+00,-1.0864050e+00,-1.0831995e+00,-1.0629271e+00,-1.0399644e+00,-1.0024593e+00,-9.5452958e-01,-8.9565145e-01,-8.2167340e-01,-7.4400946e-01,-6.6950532e-01,-5.8560572e-01,-5.0631026e-01,-4.8358707e-01,-4.8840369e-01,-4.9217213e-01,-4.9793108e-01,-4.9189505e-01,-4.8086895e-01,-4.2296244e-01,-3.3937770e-01,-2.6385143e-01,-1.5417370e-01,-3.5785853e-02,1.1345923e-01,2.5792435e-01,3.3241939e-01,3.7839063e-01,4.3119171e-01,5.0775146e-01,5.2903043e-01,5.8558361e-01,6.1954490e-01,6.0827339e-01,6.4985609e-01,7.0616761e-01,7.5370939e-01,8.4132094e-01,8.8294379e-01,8.8863603e-01,8.4892339e-01,7.7780287e-01,7.3679527e-01,6.5484667e-01,5.5761259e-01,5.3427801e-01,5.9775941e-01,6.1206577e-01,6.8588733e-01,7.1662921e-01,6.9254920e-01,6.4425774e-01,5.9393387e-01,5.7461873e-01,5.4137320e-01,5.7966904e-01,5.8452258e-01,6.5002892e-01,7.5453812e-01,7.5214296e-01,7.1400511e-01,6.3740384e-01,5.9331351e-01,5.8239701e-01,5.6934921e-01,5.4930560e-01,5.2670710e-01,4.6301159e-01,3.3708887e-01,2.3520227e-01,1.7496059e-01,1.5060388e-01,1.4227494e-01,1.7725150e-01,2.1905104e-01,1.6638925e-01,1.4112363e-01,2.1210461e-01,3.3553803e-01,4.3677659e-01,4.8087165e-01,5.1437618e-01,5.8292335e-01,6.4372292e-01,7.1933462e-01,7.7769327e-01,7.9999773e-01,8.9749168e-01,9.5174596e-01,9.3076040e-01,9.6953756e-01,1.0393359e+00,1.0207915e+00,8.9648488e-01,7.7240866e-01,6.5625037e-01,5.5100733e-01,4.7487229e-01,3.9627825e-01,3.4322054e-01,2.7783104e-01,2.4007314e-01,2.1599749e-01,1.6997650e-01,1.5541028e-01,1.4019963e-01,1.2312490e-01,1.4538486e-01,1.8835878e-01,2.5445855e-01,3.8929229e-01,5.3115500e-01,6.4466014e-01,7.6217125e-01,8.2547272e-01,8.9134592e-01,8.3949601e-01,7.6285084e-01,9.2151283e-01,9.5281623e-01,9.0314339e-01,9.6835707e-01,9.7183446e-01,9.2790474e-01,8.9648488e-01,8.8997913e-01,8.2307220e-01,7.1168665e-01,6.4793315e-01,6.0031406e-01,6.0478528e-01,5.7997592e-01,5.4425056e-01,5.7043656e-01,5.1347351e-01,4.5229062e-01,3.7427492e-01,2.9254989e-01,1.6428264e-01,1.5657665e-02,-1.1309939e-01,-2.4270787e-01,-3.4284886e-01,-3.9197590e-01,-3.7807905e-01,-3.5954700e-01,-3.7735207e-01,-3.8382354e-01,-3.8464977e-01,-3.0540881e-01,-1.7868192e-01,-9.7434229e-02,-5.8507804e-02,-3.6890534e-02,-6.1265328e-02,-1.2344017e-01,-1.6624788e-01,-1.7712260e-01,-1.0989334e-01,2.9529952e-02,1.8356635e-01,2.8474555e-01,3.6175009e-01,4.3245251e-01,4.5809035e-01,5.3890846e-01,6.6639412e-01,8.6309969e-01,1.0270771e+00,1.1479852e+00,1.3073945e+00,1.4161749e+00,1.5105739e+00,1.6476006e+00,1.7364301e+00,1.6699042e+00,1.5601289e+00,1.5684751e+00,1.4985087e+00,1.3587342e+00,1.2562828e+00,1.2628167e+00,1.3372323e+00,1.5464505e+00,1.6911490e+00,1.7702198e+00,1.7652859e+00,1.9460951e+00,2.1201599e+00,2.0042433e+00,1.6499582e+00,1.3101294e+00,1.0666858e+00,9.6737097e-01,9.6090874e-01,9.9781060e-01,1.1332212e+00,1.2967173e+00,1.4929127e+00,1.7040615e+00,1.8343013e+00,1.6217471e+00,1.2314375e+00,7.2873568e-01,3.2522319e-01,8.1523467e-03,-2.9106941e-01,-5.0487651e-01,-7.0535226e-01,-8.5965089e-01,-1.0043757e+00,-1.1135264e+00,-1.1965643e+00,-1.2414744e+00,-1.2664966e+00,-1.2665181e+00,-1.2544414e+00,-1.2401152e+00,-1.2317163e+00,-1.2387676e+00,-1.2674673e+00,-1.3209271e+00,-1.3895604e+00,-1.4815074e+00,-1.5583593e+00,-1.6224322e+00,-1.6683684e+00,-1.6982471e+00,-1.7187004e+00,-1.7317524e+00,-1.7422709e+00,-1.7499186e+00,-1.7553480e+00,-1.7602653e+00,-1.7652346e+00,-1.7690987e+00,-1.7724186e+00,-1.7743828e+00,-1.7763235e+00,-1.7787835e+00,-1.7808211e+00,-1.7836123e+00,-1.7862239e+00,-1.7883031e+00,-1.7907520e+00,-1.7925978e+00,-1.7951064e+00,-1.7976803e+00,-1.7999125e+00,-1.8014852e+00,-1.8031682e+00,-1.8047526e+00,-1.8057864e+00,-1.8073048e+00:1
-5.7643322e-01,-5.3298774e-01,-5.0687836e-01,-5.6112421e-01,-6.5208653e-01,-7.6729111e-01,-8.4949585e-01,-8.8827835e-01,-9.1485692e-01,-9.2853993e-01,-9.2320641e-01,-9.0031318e-01,-8.8434139e-01,-9.1255943e-01,-9.4883949e-01,-9.7170323e-01,-9.8879153e-01,-9.7583454e-01,-9.7737960e-01,-9.8456857e-01,-9.9444933e-01,-1.0116326e+00,-1.0313886e+00,-1.0734394e+00,-1.0896117e+00,-1.0931967e+00,-1.0881054e+00,-1.0812250e+00,-1.0954903e+00,-1.1078622e+00,-1.1120739e+00,-1.1084332e+00,-1.0914475e+00,-1.0787625e+00,-1.0702468e+00,-1.0505864e+00,-1.0246021e+00,-9.9771947e-01,-9.4820768e-01,-8.8248148e-01,-8.3049047e-01,-7.6586433e-01,-6.6517930e-01,-5.6415153e-01,-4.9556625e-01,-4.6357789e-01,-4.8152968e-01,-5.0846755e-01,-5.0733376e-01,-4.9310519e-01,-4.7746192e-01,-4.2829096e-01,-3.5948769e-01,-2.4633269e-01,-1.5645143e-01,-5.9151222e-02,1.4454040e-01,2.7737333e-01,3.4455888e-01,3.8121605e-01,3.9327528e-01,4.3725307e-01,5.0914382e-01,5.8269207e-01,6.2293233e-01,6.2866142e-01,6.7846292e-01,7.2752642e-01,8.2103340e-01,9.2691245e-01,8.3175368e-01,8.5971947e-01,9.8295721e-01,9.0684997e-01,8.2451316e-01,7.3834228e-01,5.9686793e-01,6.1085793e-01,6.6136370e-01,6.6692592e-01,6.9678228e-01,6.8913494e-01,6.9053615e-01,6.8926807e-01,6.0278372e-01,5.3227361e-01,5.7554151e-01,5.7992539e-01,6.1412924e-01,6.9282558e-01,6.7521102e-01,7.1054293e-01,7.3811262e-01,6.6308931e-01,6.1805284e-01,6.3728279e-01,6.4905433e-01,5.7294826e-01,4.9549009e-01,4.1810353e-01,3.1718682e-01,2.9593720e-01,2.9182595e-01,2.5724731e-01,2.5825593e-01,2.7682075e-01,2.5449590e-01,2.1747466e-01,2.3627870e-01,2.6800515e-01,3.0484605e-01,4.0182813e-01,4.9521937e-01,5.4649656e-01,5.7719032e-01,6.1206916e-01,6.7886210e-01,6.8304846e-01,7.1702000e-01,8.3629244e-01,8.9925111e-01,8.9045099e-01,8.5435233e-01,8.5311554e-01,8.2007963e-01,7.7729928e-01,7.7872076e-01,6.6907925e-01,5.8064440e-01,5.2826896e-01,4.4776628e-01,4.1149577e-01,3.7549831e-01,3.6289436e-01,3.3280442e-01,2.8647609e-01,2.6268362e-01,2.3237356e-01,2.2293621e-01,2.4517885e-01,2.9528841e-01,3.5307990e-01,4.0861049e-01,5.0503352e-01,6.1959345e-01,7.5326823e-01,8.6750143e-01,8.7422237e-01,8.0255503e-01,7.7162122e-01,8.5089930e-01,8.9284024e-01,9.1184053e-01,9.7986104e-01,9.7561665e-01,9.2626132e-01,8.7342146e-01,8.6598140e-01,8.4094641e-01,7.5662790e-01,7.5823174e-01,6.9290037e-01,6.2318522e-01,6.3179005e-01,6.3162170e-01,6.2098130e-01,6.1310928e-01,5.5698124e-01,4.3059938e-01,3.7687693e-01,2.3829020e-01,1.1159116e-01,6.5798564e-03,-1.2908733e-01,-2.3826240e-01,-2.9939807e-01,-2.8557430e-01,-2.6238256e-01,-2.7641393e-01,-2.9628260e-01,-2.9838585e-01,-1.8003662e-01,-8.7490201e-02,-1.6196898e-02,2.6859264e-02,3.1029500e-02,1.7162234e-02,-6.1868686e-02,-1.1885056e-01,-1.1071408e-01,-2.9579588e-02,5.6012941e-02,2.0272237e-01,2.9509598e-01,3.8433482e-01,4.4525610e-01,4.7049244e-01,5.6263544e-01,6.7709989e-01,8.4722860e-01,9.5621718e-01,1.0722651e+00,1.1437996e+00,1.2722302e+00,1.3825455e+00,1.4044028e+00,1.4293204e+00,1.4988517e+00,1.5944635e+00,1.5052716e+00,1.3697642e+00,1.3444496e+00,1.3343552e+00,1.3137121e+00,1.2727263e+00,1.4460642e+00,1.5600929e+00,1.4451236e+00,1.4823467e+00,1.8042470e+00,1.8582149e+00,1.7616395e+00,1.5401203e+00,1.2684979e+00,1.0869822e+00,9.6193312e-01,9.7428693e-01,1.1222984e+00,1.1705784e+00,1.2745837e+00,1.4317198e+00,1.5839328e+00,1.7248396e+00,1.6528573e+00,1.3514524e+00,9.1499324e-01,4.6698754e-01,1.4174603e-01,-1.3186240e-01,-3.6538979e-01,-6.0224419e-01,-7.6494472e-01,-9.2711845e-01,-1.0557331e+00,-1.1504088e+00,-1.1990849e+00,-1.2191039e+00,-1.2134086e+00,-1.1999425e+00,-1.1884337e+00,-1.1752972e+00,-1.1833020e+00,-1.2210732e+00,-1.2950986e+00,-1.3888392e+00,-1.5033345e+00,-1.6032767e+00,-1.6883166e+00,-1.7461393e+00,-1.7826627e+00,-1.8078919e+00,-1.8254660e+00,-1.8399487e+00,-1.8488712e+00,-1.8549885e+00,-1.8617288e+00,-1.8680035e+00,-1.8724202e+00,-1.8760465e+00,-1.8790368e+00,-1.8820210e+00,-1.8841979e+00,-1.8856971e+00,-1.8885837e+00,-1.8922699e+00,-1.8943861e+00,-1.8966490e+00,-1.8994357e+00,-1.9017010e+00,-1.9041204e+00,-1.9068349e+00,-1.9091876e+00,-1.9111639e+00,-1.9127787e+00,-1.9146137e+00,-1.9157485e+00:1
-4.1806821e-01,-3.5371261e-01,-3.6231337e-01,-4.6021944e-01,-5.5208820e-01,-6.4319714e-01,-7.4832691e-01,-8.1300480e-01,-8.3607823e-01,-8.3024067e-01,-8.1869116e-01,-7.9386383e-01,-7.9168235e-01,-8.2971438e-01,-8.7310463e-01,-8.9958174e-01,-9.1588172e-01,-9.2426342e-01,-9.1562640e-01,-9.0070947e-01,-9.1482710e-01,-9.3977068e-01,-9.5871585e-01,-1.0045234e+00,-1.0261267e+00,-1.0170879e+00,-1.0115636e+00,-1.0023342e+00,-1.0058897e+00,-1.0313242e+00,-1.0405132e+00,-1.0312515e+00,-1.0178443e+00,-1.0110345e+00,-1.0123682e+00,-9.9193189e-01,-9.4498281e-01,-9.0975652e-01,-8.6589293e-01,-8.0989563e-01,-7.5248705e-01,-6.8541900e-01,-6.0485890e-01,-5.0640154e-01,-4.4439441e-01,-4.3542443e-01,-4.2989966e-01,-4.4158853e-01,-4.2379318e-01,-3.9887241e-01,-4.1834810e-01,-3.7852356e-01,-3.0396598e-01,-2.3487570e-01,-1.1934025e-01,2.7494005e-02,1.5378887e-01,2.5545792e-01,3.4686430e-01,4.3764598e-01,5.2427424e-01,5.2951810e-01,5.2889779e-01,5.8052657e-01,6.1503237e-01,6.8215935e-01,7.4309767e-01,8.2036872e-01,9.5991699e-01,1.0195989e+00,9.9173726e-01,1.0215489e+00,1.0128645e+00,8.9056715e-01,8.0987779e-01,8.2701758e-01,7.7023107e-01,6.8270699e-01,6.6671818e-01,7.3308110e-01,8.2948670e-01,8.3792747e-01,8.0260628e-01,7.7767776e-01,7.6039013e-01,7.3475180e-01,6.8291201e-01,6.4512169e-01,6.6519752e-01,7.4681736e-01,7.7211497e-01,7.6062746e-01,7.7231706e-01,7.0111154e-01,6.3008705e-01,6.0384610e-01,5.6860241e-01,5.4530262e-01,5.2583204e-01,4.3089096e-01,3.4305365e-01,3.1013183e-01,2.5823003e-01,2.2572102e-01,2.4237313e-01,2.5553484e-01,2.6355988e-01,2.4863944e-01,2.6635743e-01,3.4010460e-01,4.2043453e-01,4.8760977e-01,5.4866244e-01,6.2492844e-01,6.4581907e-01,6.5560503e-01,6.9138480e-01,7.7569091e-01,8.2195914e-01,8.2899507e-01,8.6934691e-01,8.9055794e-01,9.0936155e-01,9.4978447e-01,9.5139331e-01,9.0666417e-01,8.2174213e-01,6.6548165e-01,5.5773010e-01,5.0290061e-01,4.2002406e-01,3.6408569e-01,3.4373977e-01,3.2259251e-01,3.0801118e-01,2.7319434e-01,2.4461120e-01,2.3297015e-01,2.2161411e-01,2.4595083e-01,2.8291493e-01,3.3093998e-01,4.3512816e-01,5.4764993e-01,6.7575573e-01,7.8669746e-01,8.8039251e-01,9.2304034e-01,7.9893996e-01,7.5933463e-01,9.2441915e-01,1.0248315e+00,9.9210357e-01,9.0767097e-01,8.8028883e-01,9.1422638e-01,8.9448381e-01,8.5096269e-01,8.1712473e-01,6.9481349e-01,5.8278497e-01,5.5769545e-01,5.8128302e-01,6.1524573e-01,5.6846291e-01,5.2159133e-01,5.1252747e-01,4.6357150e-01,3.6768766e-01,3.3275472e-01,2.2775612e-01,7.2772098e-02,-9.0733128e-02,-2.0775370e-01,-2.8411973e-01,-3.2887505e-01,-3.5102166e-01,-3.5957036e-01,-3.2201197e-01,-2.9912089e-01,-3.0325778e-01,-2.1588988e-01,-1.4532339e-01,-1.1101046e-01,-7.4016091e-02,-3.7452516e-02,-6.3166592e-02,-1.4628135e-01,-2.2328203e-01,-2.3166036e-01,-1.0199719e-01,-1.2427483e-02,6.5794224e-02,1.2961389e-01,1.6993839e-01,2.5654194e-01,3.1518924e-01,3.9541973e-01,4.8049092e-01,6.9193683e-01,8.8726934e-01,1.0359669e+00,1.1776503e+00,1.2733909e+00,1.4306790e+00,1.4856635e+00,1.4764620e+00,1.5369690e+00,1.5265299e+00,1.5137456e+00,1.4724924e+00,1.3253014e+00,1.2054584e+00,1.1777380e+00,1.1913548e+00,1.2678907e+00,1.3115403e+00,1.4540807e+00,1.5753970e+00,1.7756546e+00,1.9798073e+00,1.8058068e+00,1.4157629e+00,1.1563838e+00,1.0156736e+00,9.2867376e-01,8.2522434e-01,8.2416095e-01,1.0123837e+00,1.2120269e+00,1.3629778e+00,1.4669345e+00,1.5930059e+00,1.5049185e+00,1.1457170e+00,7.1802072e-01,3.9731621e-01,1.1938675e-01,-1.6710501e-01,-3.9430750e-01,-6.0650006e-01,-7.6873775e-01,-9.2414146e-01,-1.0479548e+00,-1.1455039e+00,-1.2040252e+00,-1.2382911e+00,-1.2378769e+00,-1.2248319e+00,-1.2086632e+00,-1.1907740e+00,-1.1911391e+00,-1.2327806e+00,-1.3115527e+00,-1.4056117e+00,-1.5281505e+00,-1.6318366e+00,-1.7210659e+00,-1.7861214e+00,-1.8312765e+00,-1.8631143e+00,-1.8827656e+00,-1.8987562e+00,-1.9106351e+00,-1.9193440e+00,-1.9258442e+00,-1.9330077e+00,-1.9393049e+00,-1.9437506e+00,-1.9479391e+00,-1.9517898e+00,-1.9546693e+00,-1.9580820e+00,-1.9618492e+00,-1.9655101e+00,-1.9686912e+00,-1.9717816e+00,-1.9750805e+00,-1.9784839e+00,-1.9818859e+00,-1.9854779e+00,-1.9889955e+00,-1.9912610e+00,-1.9930087e+00,-1.9953928e+00,-1.9975214e+00:1
-5.1462958e-01,-4.8927034e-01,-4.3838821e-01,-4.5496406e-01,-6.0239219e-01,-7.1440149e-01,-7.8294266e-01,-8.3606330e-01,-8.5413660e-01,-8.6456684e-01,-8.7161075e-01,-8.6796966e-01,-8.8538036e-01,-9.1420619e-01,-9.4152311e-01,-9.6492070e-01,-9.7356067e-01,-9.5965815e-01,-9.4835395e-01,-9.6095763e-01,-9.6558812e-01,-9.8575330e-01,-1.0143134e+00,-1.0314930e+00,-1.0496212e+00,-1.0444563e+00,-1.0186017e+00,-1.0305017e+00,-1.0469865e+00,-1.0604940e+00,-1.0817389e+00,-1.0430274e+00,-1.0176800e+00,-1.0377787e+00,-1.0279978e+00,-1.0054459e+00,-9.8601204e-01,-9.5461372e-01,-8.9384241e-01,-8.3487529e-01,-7.8520518e-01,-7.1661727e-01,-6.2876087e-01,-5.4825396e-01,-5.1568993e-01,-4.9854655e-01,-4.9644224e-01,-5.0145119e-01,-5.0941248e-01,-5.1729188e-01,-4.9794054e-01,-4.6683354e-01,-3.9781851e-01,-2.9376536e-01,-1.7347527e-01,-8.7733470e-02,6.6312203e-02,1.9420421e-01,2.3114546e-01,2.7009380e-01,3.0264883e-01,3.3711889e-01,3.4443965e-01,4.0674807e-01,4.4173817e-01,4.6622741e-01,5.4000809e-01,6.2775795e-01,6.5218962e-01,6.9248236e-01,7.1167914e-01,7.0783516e-01,7.2747257e-01,7.6863370e-01,8.6629460e-01,7.7311167e-01,6.3496724e-01,6.5864918e-01,6.3725762e-01,5.8311371e-01,6.4114609e-01,7.3064613e-01,7.1582046e-01,6.2830372e-01,5.4273813e-01,5.5052321e-01,5.4141603e-01,5.4954796e-01,5.3821771e-01,5.2916713e-01,5.9560164e-01,6.5510048e-01,6.5815507e-01,6.0700026e-01,5.8315359e-01,5.9036514e-01,5.4305142e-01,5.3073714e-01,4.9355290e-01,3.9573809e-01,4.1674561e-01,3.2470824e-01,2.2094138e-01,2.6837878e-01,2.8877568e-01,2.9264990e-01,2.7379610e-01,2.0231609e-01,1.9361031e-01,2.3900814e-01,3.1351080e-01,4.7211461e-01,5.6430986e-01,5.3173800e-01,5.7137521e-01,6.0440602e-01,6.1543830e-01,7.3592829e-01,8.0209495e-01,8.0051605e-01,7.6483365e-01,7.2141569e-01,8.1929718e-01,8.7391033e-01,8.5639438e-01,8.4003771e-01,7.2717031e-01,5.9500227e-01,4.9582324e-01,4.6562933e-01,4.3402190e-01,3.8498984e-01,3.4288937e-01,2.7266168e-01,2.5796323e-01,2.8058063e-01,2.7727255e-01,2.3506415e-01,2.3463403e-01,2.4114793e-01,2.1115038e-01,3.1011397e-01,4.1609951e-01,4.8046165e-01,6.3856535e-01,7.0953078e-01,7.2002908e-01,7.5182461e-01,7.3941558e-01,7.0300241e-01,7.7284821e-01,8.7914319e-01,9.0916646e-01,9.0056733e-01,9.3924997e-01,9.5682809e-01,9.5879231e-01,9.5724299e-01,8.6934919e-01,7.8691311e-01,6.9683600e-01,6.2776545e-01,6.1144469e-01,5.6040896e-01,6.0770027e-01,6.3194781e-01,5.7910402e-01,5.7151851e-01,5.0879316e-01,4.1315050e-01,2.6158760e-01,1.6913394e-01,5.1283310e-02,-8.3387976e-02,-1.5038583e-01,-2.1713267e-01,-2.2227121e-01,-1.8176379e-01,-1.8167429e-01,-2.0548752e-01,-2.0342791e-01,-1.2879042e-01,-4.8128203e-02,4.2977750e-02,5.7498921e-02,-7.7535801e-03,-1.9306014e-02,-4.9339470e-02,-9.2747674e-02,-3.6980167e-02,5.2241412e-02,1.1002609e-01,1.7612297e-01,2.4932369e-01,3.9163632e-01,3.7546840e-01,3.8264319e-01,5.0775381e-01,5.8448029e-01,6.6037278e-01,7.9969825e-01,9.2630042e-01,1.0191072e+00,1.0356193e+00,1.1475703e+00,1.3710403e+00,1.4683546e+00,1.5153767e+00,1.4052654e+00,1.3313184e+00,1.3476269e+00,1.3527500e+00,1.3719692e+00,1.2637534e+00,1.1429816e+00,1.3168007e+00,1.6000338e+00,1.7512060e+00,1.7289395e+00,1.9463760e+00,2.0468287e+00,2.0153209e+00,1.6937705e+00,1.4041343e+00,1.3262449e+00,1.1978834e+00,1.0368027e+00,1.0584402e+00,1.2640792e+00,1.2987791e+00,1.3427968e+00,1.6600525e+00,1.8745067e+00,1.9078045e+00,1.6595891e+00,1.1174915e+00,7.1611531e-01,4.3091008e-01,1.2847496e-01,-1.1549755e-01,-3.9183892e-01,-5.8940812e-01,-7.8316099e-01,-9.2292869e-01,-1.0165222e+00,-1.0831913e+00,-1.1238415e+00,-1.1274343e+00,-1.1127042e+00,-1.0847541e+00,-1.0545750e+00,-1.0505534e+00,-1.0864593e+00,-1.1670911e+00,-1.2825245e+00,-1.4337053e+00,-1.5642211e+00,-1.6804867e+00,-1.7630178e+00,-1.8181786e+00,-1.8549552e+00,-1.8802171e+00,-1.8989111e+00,-1.9104735e+00,-1.9215236e+00,-1.9299915e+00,-1.9364315e+00,-1.9431416e+00,-1.9489779e+00,-1.9537288e+00,-1.9586514e+00,-1.9610933e+00,-1.9636632e+00,-1.9687294e+00,-1.9733606e+00,-1.9766374e+00,-1.9809641e+00,-1.9850788e+00,-1.9888419e+00,-1.9924407e+00,-1.9952345e+00,-1.9983500e+00,-2.0018958e+00,-2.0045729e+00,-2.0063342e+00,-2.0080131e+00:1
-6.2909419e-01,-6.0395183e-01,-6.3946480e-01,-6.7217873e-01,-7.2981696e-01,-8.1130731e-01,-8.6505099e-01,-8.9712317e-01,-9.2096930e-01,-9.3593685e-01,-9.3256674e-01,-9.2058967e-01,-9.1985788e-01,-9.4675458e-01,-9.8170740e-01,-9.9948704e-01,-1.0017932e+00,-1.0004940e+00,-9.9485472e-01,-1.0085826e+00,-1.0307119e+00,-1.0521258e+00,-1.0646441e+00,-1.0751883e+00,-1.0941701e+00,-1.0870324e+00,-1.0634697e+00,-1.0483512e+00,-1.0440581e+00,-1.0562291e+00,-1.0582035e+00,-1.0449673e+00,-1.0451448e+00,-1.0448510e+00,-1.0365389e+00,-1.0220494e+00,-9.9301770e-01,-9.5051994e-01,-9.1040555e-01,-8.5722330e-01,-8.0319141e-01,-7.5399386e-01,-6.3540482e-01,-4.9886120e-01,-4.6327337e-01,-4.3493383e-01,-4.2297675e-01,-4.5276715e-01,-4.4583241e-01,-4.5015204e-01,-4.4885689e-01,-4.2898379e-01,-3.8671734e-01,-2.8587490e-01,-1.5482875e-01,-2.4444441e-02,8.3502558e-02,1.8044318e-01,2.6382840e-01,3.0653459e-01,3.7543403e-01,4.6652054e-01,4.6059008e-01,4.5800662e-01,4.8586621e-01,4.8897710e-01,5.4194611e-01,6.4068546e-01,7.3745915e-01,7.5955682e-01,7.7146213e-01,8.2745755e-01,7.9338089e-01,6.9665511e-01,6.2737314e-01,6.0070186e-01,5.9429979e-01,5.6334075e-01,5.1635931e-01,5.7175201e-01,7.0873399e-01,7.7785886e-01,6.8273632e-01,6.2933421e-01,6.0366250e-01,5.6487940e-01,5.3660510e-01,5.1768152e-01,5.6806953e-01,6.1125578e-01,6.5937794e-01,7.4213479e-01,7.9554514e-01,7.0322112e-01,6.4689237e-01,6.4200297e-01,5.9892548e-01,5.6062169e-01,4.9353980e-01,4.3082171e-01,3.8251004e-01,2.6099781e-01,2.0935132e-01,2.4433334e-01,2.4478420e-01,2.2959903e-01,2.2340143e-01,2.1417656e-01,2.1131955e-01,2.5286534e-01,3.8248523e-01,5.1268261e-01,5.1850699e-01,5.0272125e-01,5.7618286e-01,6.9922659e-01,7.2652282e-01,7.2705538e-01,8.1651565e-01,9.5110238e-01,9.3648678e-01,9.1169262e-01,9.1123834e-01,8.9498335e-01,9.8481823e-01,9.5734704e-01,7.7726737e-01,6.4179775e-01,5.8531426e-01,5.3922288e-01,4.5857629e-01,3.9747064e-01,3.5788175e-01,3.0485050e-01,2.6826855e-01,2.7310663e-01,2.6201780e-01,2.3385482e-01,2.1325068e-01,2.0870369e-01,2.7242606e-01,3.4113333e-01,4.3105730e-01,5.6302196e-01,6.9799464e-01,7.5849212e-01,8.2917351e-01,9.2604184e-01,8.7186954e-01,8.1250594e-01,8.7520243e-01,9.0048017e-01,8.6745901e-01,9.1833927e-01,9.7856448e-01,9.8869555e-01,9.4410080e-01,8.8680436e-01,7.6187367e-01,7.0053511e-01,6.6745887e-01,5.7023667e-01,5.6511179e-01,6.1428293e-01,5.7035548e-01,5.5327619e-01,5.2502841e-01,5.1166956e-01,4.6412498e-01,3.0428853e-01,1.3416327e-01,3.2867086e-02,-4.7276142e-02,-1.5884028e-01,-2.4639980e-01,-3.1023467e-01,-3.2098033e-01,-3.1242309e-01,-3.1245186e-01,-2.7691440e-01,-2.5793820e-01,-1.4052551e-01,-2.8086498e-02,3.7452675e-02,3.3896490e-02,-2.1801203e-02,-7.7767103e-02,-1.4620232e-01,-1.8596905e-01,-1.9283738e-01,-8.2081492e-02,3.5324568e-02,1.1570606e-01,2.3076500e-01,4.3825875e-01,4.8070646e-01,4.4604954e-01,5.1582942e-01,5.8037117e-01,7.5259545e-01,9.0844485e-01,1.0145855e+00,1.1816549e+00,1.3125056e+00,1.4202943e+00,1.4639271e+00,1.5674939e+00,1.6855776e+00,1.6631021e+00,1.5813943e+00,1.4475483e+00,1.3369996e+00,1.4221478e+00,1.4075864e+00,1.3145542e+00,1.4620235e+00,1.5219735e+00,1.6104007e+00,1.7682219e+00,1.9981303e+00,1.9648174e+00,1.7789223e+00,1.5362860e+00,1.3279046e+00,1.1575912e+00,9.2163783e-01,8.8708058e-01,1.0399510e+00,1.1754779e+00,1.4015725e+00,1.5667272e+00,1.7676852e+00,1.9508644e+00,1.7804847e+00,1.3241280e+00,7.8661810e-01,4.4644832e-01,1.5414149e-01,-1.3145871e-01,-3.7618888e-01,-6.0670436e-01,-7.7847169e-01,-9.4907721e-01,-1.0778181e+00,-1.1859672e+00,-1.2538912e+00,-1.2929606e+00,-1.3143222e+00,-1.3314984e+00,-1.3356646e+00,-1.3353281e+00,-1.3535649e+00,-1.3860851e+00,-1.4329355e+00,-1.4924730e+00,-1.5610491e+00,-1.6165511e+00,-1.6653496e+00,-1.7000932e+00,-1.7228108e+00,-1.7402818e+00,-1.7521451e+00,-1.7616110e+00,-1.7684379e+00,-1.7738977e+00,-1.7786486e+00,-1.7835003e+00,-1.7877971e+00,-1.7898316e+00,-1.7918451e+00,-1.7952893e+00,-1.7978162e+00,-1.7999698e+00,-1.8024652e+00,-1.8048930e+00,-1.8076612e+00,-1.8101641e+00,-1.8123578e+00,-1.8160353e+00,-1.8193956e+00,-1.8217602e+00,-1.8235015e+00,-1.8254132e+00,-1.8277802e+00,-1.8291416e+00,-1.8308087e+00:1
-6.2617203e-01,-5.5686824e-01,-5.4579751e-01,-5.8558229e-01,-6.7391162e-01,-7.6622656e-01,-8.2892123e-01,-8.6945233e-01,-8.8105878e-01,-8.7628436e-01,-8.5910846e-01,-8.4050597e-01,-8.5034776e-01,-8.8228614e-01,-9.2427149e-01,-9.6566314e-01,-1.0024536e+00,-1.0226676e+00,-1.0188168e+00,-1.0294724e+00,-1.0468866e+00,-1.0552218e+00,-1.0793825e+00,-1.0995863e+00,-1.0999804e+00,-1.0931707e+00,-1.0672325e+00,-1.0286298e+00,-1.0267720e+00,-1.0413859e+00,-1.0380548e+00,-1.0320579e+00,-1.0253459e+00,-1.0293469e+00,-1.0265317e+00,-1.0072221e+00,-9.9221554e-01,-9.6465459e-01,-9.1062848e-01,-8.5370540e-01,-7.9207248e-01,-6.9612947e-01,-5.8795997e-01,-4.8583699e-01,-3.9117600e-01,-3.5482246e-01,-3.5984217e-01,-3.7330965e-01,-3.6459025e-01,-3.7319925e-01,-3.9446017e-01,-3.7417841e-01,-3.5821213e-01,-3.1275504e-01,-2.1414630e-01,-8.9142687e-02,8.2935611e-02,2.0713307e-01,2.7910086e-01,3.5914723e-01,3.7816907e-01,3.9592728e-01,4.1775185e-01,4.5291960e-01,5.1124981e-01,5.5730972e-01,5.5322020e-01,5.7635777e-01,6.9543055e-01,7.3785551e-01,7.2578801e-01,7.4680471e-01,6.6049777e-01,6.0794881e-01,5.7460608e-01,5.6901280e-01,5.2917229e-01,4.2902048e-01,4.7920566e-01,5.8726357e-01,6.6548081e-01,7.2028540e-01,6.7446879e-01,6.0979302e-01,5.4550643e-01,4.9243195e-01,5.1295027e-01,5.4765087e-01,5.4700410e-01,5.8495141e-01,6.9317757e-01,7.4056955e-01,7.3567996e-01,6.8793680e-01,6.1236821e-01,5.9283448e-01,6.1251527e-01,6.0777487e-01,5.7631978e-01,5.0633308e-01,4.0397541e-01,3.0622259e-01,2.6531820e-01,2.3451055e-01,2.0343630e-01,2.1846339e-01,2.4051313e-01,2.3610167e-01,2.6171661e-01,3.2966397e-01,3.9193240e-01,4.6765018e-01,5.3414130e-01,5.8701894e-01,6.8073969e-01,7.5245014e-01,8.2127950e-01,9.3092271e-01,9.4767462e-01,9.9320213e-01,1.0584407e+00,1.0090641e+00,1.0116991e+00,1.0626968e+00,1.0746043e+00,1.0580025e+00,9.3001860e-01,7.8198993e-01,7.0451715e-01,6.2519566e-01,4.9920878e-01,4.0474265e-01,3.6968371e-01,3.3521753e-01,2.9446882e-01,2.7794432e-01,2.5855594e-01,2.5513821e-01,2.4793779e-01,2.3348347e-01,2.8020498e-01,3.5389150e-01,4.3514683e-01,5.3510762e-01,6.6537332e-01,7.5073949e-01,7.9663182e-01,9.0460898e-01,9.2981422e-01,8.5734368e-01,8.6760694e-01,9.4534777e-01,9.7932906e-01,9.4550781e-01,9.5506102e-01,1.0161666e+00,9.8726044e-01,9.3220606e-01,8.1725709e-01,7.4221336e-01,6.8479334e-01,6.1899677e-01,6.4552005e-01,6.5356090e-01,5.8594898e-01,5.5384129e-01,5.5687329e-01,5.1046338e-01,4.4547018e-01,3.7134353e-01,2.1499615e-01,7.6803308e-02,-4.5528229e-02,-1.8789717e-01,-2.8509508e-01,-3.2797752e-01,-3.2173018e-01,-2.9831582e-01,-3.0077954e-01,-3.1248474e-01,-3.1090963e-01,-1.8772429e-01,-5.1834205e-02,2.4310076e-02,7.9307404e-02,1.2946400e-02,-8.8532449e-02,-1.4005605e-01,-2.0808336e-01,-2.6178185e-01,-2.0901421e-01,-7.9796770e-02,5.2474642e-02,1.4934745e-01,2.3158273e-01,2.9685484e-01,3.4580458e-01,4.4826524e-01,5.6386125e-01,7.1213349e-01,8.8132751e-01,1.0145390e+00,1.1112559e+00,1.2521770e+00,1.3205045e+00,1.3694614e+00,1.5118368e+00,1.5948596e+00,1.5905876e+00,1.6081200e+00,1.4927252e+00,1.3157137e+00,1.3017143e+00,1.3644077e+00,1.4713106e+00,1.5282749e+00,1.4301133e+00,1.5308870e+00,1.6879574e+00,1.8059047e+00,1.9291594e+00,1.7826337e+00,1.4377789e+00,1.1304419e+00,9.8406245e-01,9.2790553e-01,8.9418965e-01,1.0269857e+00,1.2870590e+00,1.4459285e+00,1.5822192e+00,1.8543951e+00,1.9706292e+00,1.7945850e+00,1.4431643e+00,9.0936553e-01,4.0511845e-01,3.6424174e-02,-2.9388543e-01,-5.5064354e-01,-7.5414158e-01,-9.1100072e-01,-1.0705556e+00,-1.1823096e+00,-1.2734467e+00,-1.3346865e+00,-1.3818489e+00,-1.4131555e+00,-1.4330288e+00,-1.4489246e+00,-1.4642588e+00,-1.4810609e+00,-1.5040710e+00,-1.5376328e+00,-1.5759019e+00,-1.6161673e+00,-1.6485351e+00,-1.6762756e+00,-1.6974416e+00,-1.7120623e+00,-1.7235177e+00,-1.7317397e+00,-1.7383484e+00,-1.7440329e+00,-1.7484024e+00,-1.7514038e+00,-1.7550782e+00,-1.7588715e+00,-1.7613994e+00,-1.7629818e+00,-1.7651532e+00,-1.7669433e+00,-1.7688614e+00,-1.7717742e+00,-1.7752714e+00,-1.7771924e+00,-1.7792058e+00,-1.7824388e+00,-1.7853203e+00,-1.7880102e+00,-1.7906227e+00,-1.7934769e+00,-1.7960424e+00,-1.7978357e+00,-1.7990404e+00,-1.8001914e+00:1
-6.5403491e-01,-6.3471550e-01,-6.2591112e-01,-6.5057748e-01,-7.1011153e-01,-7.9393303e-01,-8.7650045e-01,-9.1708541e-01,-9.2723140e-01,-9.1861619e-01,-9.0504849e-01,-8.8425405e-01,-8.8279555e-01,-9.1772946e-01,-9.5532371e-01,-9.8722640e-01,-9.9940125e-01,-1.0021007e+00,-1.0005365e+00,-9.9862548e-01,-1.0106343e+00,-1.0328134e+00,-1.0550429e+00,-1.0746259e+00,-1.0784039e+00,-1.0631444e+00,-1.0457623e+00,-1.0351334e+00,-1.0342879e+00,-1.0446116e+00,-1.0536142e+00,-1.0396135e+00,-1.0293595e+00,-1.0232959e+00,-1.0187269e+00,-1.0183166e+00,-9.9805131e-01,-9.5683332e-01,-9.0511286e-01,-8.5731276e-01,-7.8979611e-01,-7.0672638e-01,-6.2614716e-01,-5.2153264e-01,-4.6236748e-01,-4.5331308e-01,-4.3913266e-01,-4.4951767e-01,-4.6206198e-01,-4.4630659e-01,-4.4647374e-01,-4.2984517e-01,-3.5773885e-01,-2.7250120e-01,-1.7890825e-01,-4.5448664e-02,1.0912894e-01,2.3419102e-01,3.2882797e-01,3.7487112e-01,4.2793883e-01,4.7126785e-01,5.1497480e-01,6.2066664e-01,7.2324778e-01,7.0777771e-01,6.8893604e-01,7.2875850e-01,7.7736981e-01,8.5009872e-01,9.1723277e-01,8.5305525e-01,7.6463716e-01,7.4425356e-01,7.0759489e-01,6.8252546e-01,6.2483772e-01,5.7689263e-01,6.1029476e-01,6.8861938e-01,7.5947897e-01,7.4976328e-01,6.9360238e-01,6.0117683e-01,5.6216247e-01,5.6728029e-01,5.2623566e-01,5.5364101e-01,6.2572206e-01,7.2096029e-01,8.0524894e-01,7.7318983e-01,7.4221411e-01,7.2836292e-01,6.4534302e-01,5.9578159e-01,5.6394724e-01,5.4096357e-01,5.3366060e-01,4.3814143e-01,3.3886088e-01,2.5834646e-01,2.0138635e-01,1.9363712e-01,1.9954412e-01,2.2889630e-01,2.0216296e-01,1.6604020e-01,1.8161531e-01,2.3624952e-01,3.6853565e-01,5.1100192e-01,5.7716087e-01,5.8815689e-01,6.3292704e-01,7.2304209e-01,8.1028290e-01,8.5014390e-01,8.7469802e-01,9.0959946e-01,9.5602421e-01,9.9940320e-01,1.0235599e+00,1.0134695e+00,1.0103223e+00,9.1339374e-01,7.2318453e-01,6.2912401e-01,5.6129282e-01,5.0086229e-01,4.5172947e-01,3.8186293e-01,2.9180139e-01,2.5598456e-01,2.5157051e-01,2.4982118e-01,2.2935767e-01,1.8090222e-01,1.6959519e-01,1.7326876e-01,2.4375098e-01,3.6496315e-01,4.4941162e-01,5.4404815e-01,7.1133369e-01,8.3165390e-01,8.6677134e-01,8.7790204e-01,8.2301992e-01,8.3879380e-01,9.5607645e-01,9.9300957e-01,9.7158929e-01,9.5947473e-01,9.9326947e-01,9.6534290e-01,9.0254116e-01,8.6301630e-01,7.8371671e-01,6.7493761e-01,6.1732384e-01,5.8068098e-01,5.4150512e-01,5.3700524e-01,5.3121541e-01,4.9938656e-01,4.6511576e-01,4.3137353e-01,3.3960968e-01,2.5181432e-01,1.2242177e-01,-1.0700828e-02,-1.4389105e-01,-2.6308637e-01,-3.4646287e-01,-3.8763188e-01,-3.8863155e-01,-3.7747149e-01,-3.7407970e-01,-3.6811510e-01,-3.7159823e-01,-2.7596061e-01,-1.3499561e-01,-6.5753070e-02,-6.9555399e-02,-9.4008159e-02,-1.3815671e-01,-2.0019666e-01,-2.6166810e-01,-2.7258040e-01,-1.7523157e-01,-8.6103641e-02,1.8563820e-02,1.4347752e-01,2.9908021e-01,3.3278192e-01,3.3704237e-01,4.5284110e-01,6.2151864e-01,8.3111474e-01,9.3358309e-01,1.0595048e+00,1.2575259e+00,1.4188169e+00,1.5151560e+00,1.5855866e+00,1.7059404e+00,1.7936032e+00,1.7282511e+00,1.6452605e+00,1.5176216e+00,1.4095407e+00,1.4329420e+00,1.4083572e+00,1.3725230e+00,1.5401396e+00,1.5734257e+00,1.6280646e+00,1.8008017e+00,1.9478043e+00,1.9522107e+00,1.7634121e+00,1.5247557e+00,1.2258347e+00,1.0206425e+00,9.1384805e-01,8.4978742e-01,9.4086134e-01,1.1096458e+00,1.2826158e+00,1.4622851e+00,1.6733313e+00,1.7946840e+00,1.7274536e+00,1.3167775e+00,7.0110934e-01,2.8419730e-01,-3.3600780e-02,-3.2555155e-01,-5.3474684e-01,-7.4666234e-01,-9.0224710e-01,-1.0477371e+00,-1.1589915e+00,-1.2401802e+00,-1.2930269e+00,-1.3331800e+00,-1.3555581e+00,-1.3668452e+00,-1.3714943e+00,-1.3744032e+00,-1.3877862e+00,-1.4140081e+00,-1.4528592e+00,-1.4997144e+00,-1.5537233e+00,-1.5969593e+00,-1.6341170e+00,-1.6623072e+00,-1.6815093e+00,-1.6956760e+00,-1.7055646e+00,-1.7140604e+00,-1.7202943e+00,-1.7243843e+00,-1.7280767e+00,-1.7316326e+00,-1.7354389e+00,-1.7387968e+00,-1.7407106e+00,-1.7426190e+00,-1.7442696e+00,-1.7460606e+00,-1.7488564e+00,-1.7523265e+00,-1.7537679e+00,-1.7556341e+00,-1.7581491e+00,-1.7602852e+00,-1.7631667e+00,-1.7662034e+00,-1.7681609e+00,-1.7698778e+00,-1.7716513e+00,-1.7728353e+00,-1.7742307e+00:1
-6.7546256e-01,-6.1780148e-01,-6.1906915e-01,-6.6447600e-01,-7.5110223e-01,-8.4118766e-01,-9.0001286e-01,-9.3792622e-01,-9.5363517e-01,-9.4810902e-01,-9.2668439e-01,-8.9887007e-01,-8.9762203e-01,-9.4273950e-01,-9.7731298e-01,-9.9955085e-01,-1.0218811e+00,-1.0343651e+00,-1.0381353e+00,-1.0470809e+00,-1.0516123e+00,-1.0620033e+00,-1.0856481e+00,-1.0993465e+00,-1.1158500e+00,-1.1128403e+00,-1.0843059e+00,-1.0692675e+00,-1.0704423e+00,-1.0769304e+00,-1.0789963e+00,-1.0720945e+00,-1.0663796e+00,-1.0667552e+00,-1.0609425e+00,-1.0414195e+00,-1.0225390e+00,-9.9609863e-01,-9.4798244e-01,-8.9308984e-01,-8.2774046e-01,-7.3810103e-01,-6.4034955e-01,-5.4355408e-01,-4.8688117e-01,-4.7517648e-01,-4.8256684e-01,-5.0585582e-01,-5.1886058e-01,-5.0048695e-01,-4.9861509e-01,-4.8659797e-01,-4.2619701e-01,-3.5137571e-01,-2.1802807e-01,-4.1780857e-02,1.1209809e-01,2.4781232e-01,3.6916167e-01,3.8747786e-01,3.7769259e-01,4.1234049e-01,4.6838300e-01,5.0925543e-01,5.1782099e-01,5.3346039e-01,5.6957644e-01,6.1251645e-01,6.2506098e-01,6.7842670e-01,7.4555613e-01,7.6239338e-01,7.2752945e-01,6.2690110e-01,5.5024442e-01,5.4913956e-01,5.4801376e-01,5.1545742e-01,5.0309005e-01,5.6675067e-01,6.4873985e-01,6.9621430e-01,6.6533988e-01,5.6634524e-01,4.8340688e-01,4.7770041e-01,5.0676225e-01,5.4711992e-01,6.3067761e-01,6.7288646e-01,7.4121059e-01,7.7501707e-01,7.0709719e-01,6.6552521e-01,6.3873237e-01,6.0319009e-01,5.6567834e-01,5.6602476e-01,5.1592884e-01,4.1931765e-01,3.0560037e-01,2.3116211e-01,1.7541729e-01,1.4188991e-01,1.6579758e-01,1.7726649e-01,1.7133690e-01,1.6444193e-01,1.9443199e-01,2.8075131e-01,3.8575590e-01,4.9544376e-01,5.8780451e-01,6.0061313e-01,6.8225524e-01,7.4683723e-01,7.8423319e-01,8.8110953e-01,9.2138580e-01,9.5202339e-01,1.0021940e+00,1.0063478e+00,9.8557882e-01,1.0158782e+00,1.0129074e+00,9.6538484e-01,8.4171486e-01,7.0610996e-01,6.2871645e-01,5.2473057e-01,4.1951510e-01,3.5041186e-01,3.1754663e-01,2.9355690e-01,2.5436917e-01,2.2943909e-01,2.0343433e-01,1.7753204e-01,1.8219278e-01,2.1153202e-01,2.5323691e-01,3.4570290e-01,4.7119639e-01,6.1867379e-01,7.5933408e-01,8.1363434e-01,8.6106861e-01,9.3003170e-01,8.9145514e-01,8.1318425e-01,8.6923374e-01,9.2094006e-01,9.3031174e-01,9.0647072e-01,9.3603217e-01,9.4119028e-01,8.9300087e-01,8.5904620e-01,7.4240594e-01,6.6560885e-01,6.2432612e-01,5.7467528e-01,5.5067831e-01,5.6988650e-01,5.5098798e-01,5.1540882e-01,5.0537617e-01,4.4875094e-01,3.2745428e-01,2.2543128e-01,9.9005612e-02,-4.0824670e-03,-1.3104897e-01,-2.5496421e-01,-3.2566612e-01,-3.6164993e-01,-3.6031245e-01,-3.4543373e-01,-3.4761289e-01,-3.5300705e-01,-3.4449734e-01,-2.0101669e-01,-7.9691842e-02,-2.1663405e-02,-1.9278066e-03,-3.3861249e-02,-9.0025598e-02,-1.6448836e-01,-2.2639711e-01,-2.2665093e-01,-1.2465006e-01,-3.0349092e-02,8.2344863e-02,1.5297697e-01,2.4297007e-01,3.6901638e-01,3.9196961e-01,4.7928368e-01,6.1262512e-01,8.2676818e-01,9.9113710e-01,1.0711717e+00,1.1694175e+00,1.3437524e+00,1.4975497e+00,1.6181600e+00,1.7339011e+00,1.7679576e+00,1.7162690e+00,1.6846103e+00,1.6155533e+00,1.4768390e+00,1.3715846e+00,1.2880724e+00,1.3034354e+00,1.5448523e+00,1.6484020e+00,1.7209580e+00,1.8535869e+00,2.1129720e+00,2.1056375e+00,1.8466246e+00,1.5900796e+00,1.3159350e+00,1.0738816e+00,9.6729766e-01,9.5369108e-01,1.0822120e+00,1.2449796e+00,1.4021702e+00,1.6102386e+00,1.8225926e+00,1.9233035e+00,1.7297138e+00,1.3454295e+00,7.7738999e-01,3.1944194e-01,2.7191985e-02,-2.8149493e-01,-5.1932436e-01,-7.1709553e-01,-8.7619029e-01,-1.0264696e+00,-1.1310967e+00,-1.2155108e+00,-1.2665226e+00,-1.2974488e+00,-1.3103354e+00,-1.3115020e+00,-1.3087653e+00,-1.3063263e+00,-1.3147951e+00,-1.3357450e+00,-1.3767670e+00,-1.4322636e+00,-1.4947684e+00,-1.5467246e+00,-1.5939837e+00,-1.6284004e+00,-1.6519423e+00,-1.6690020e+00,-1.6801401e+00,-1.6886537e+00,-1.6949327e+00,-1.7001170e+00,-1.7031769e+00,-1.7069510e+00,-1.7113200e+00,-1.7140234e+00,-1.7154762e+00,-1.7180171e+00,-1.7199531e+00,-1.7217886e+00,-1.7247828e+00,-1.7276409e+00,-1.7297982e+00,-1.7315808e+00,-1.7335374e+00,-1.7360817e+00,-1.7387771e+00,-1.7415600e+00,-1.7436119e+00,-1.7452583e+00,-1.7470727e+00,-1.7484888e+00,-1.7494639e+00:1
-5.3874235e-01,-4.7511614e-01,-4.8579124e-01,-5.6873435e-01,-6.5473954e-01,-7.4705635e-01,-8.3287956e-01,-8.6936615e-01,-8.8986142e-01,-8.8882384e-01,-8.6334809e-01,-8.4220676e-01,-8.4369961e-01,-8.8040670e-01,-9.1241556e-01,-9.4213941e-01,-9.5956281e-01,-9.6435467e-01,-9.6444682e-01,-9.6641438e-01,-9.7495356e-01,-9.8121470e-01,-1.0081687e+00,-1.0402236e+00,-1.0565109e+00,-1.0575533e+00,-1.0387930e+00,-1.0204496e+00,-1.0320063e+00,-1.0520510e+00,-1.0557722e+00,-1.0428177e+00,-1.0306685e+00,-1.0375037e+00,-1.0360841e+00,-1.0122182e+00,-9.8871332e-01,-9.5671226e-01,-9.0609830e-01,-8.4546842e-01,-7.8506600e-01,-7.2713723e-01,-6.4651251e-01,-5.4818445e-01,-4.6211119e-01,-4.4186481e-01,-4.4281986e-01,-4.4741099e-01,-4.7186777e-01,-4.6546765e-01,-4.4328228e-01,-4.1109343e-01,-3.3266888e-01,-2.3518729e-01,-1.2171654e-01,1.2687489e-02,1.2959457e-01,2.8328112e-01,4.0916457e-01,4.6688214e-01,5.3984535e-01,5.6864636e-01,5.7188610e-01,6.1303587e-01,6.1060557e-01,6.6112140e-01,7.4797720e-01,7.7558904e-01,8.3847356e-01,8.9559572e-01,9.0226598e-01,8.8099830e-01,8.7664262e-01,8.5006287e-01,8.1613576e-01,8.1287776e-01,7.1810010e-01,6.5626760e-01,6.7449147e-01,6.4868065e-01,6.7194378e-01,7.5978203e-01,7.4786612e-01,6.9301835e-01,6.3252777e-01,5.7790681e-01,5.7500181e-01,5.7273538e-01,5.9950010e-01,6.6531054e-01,7.3384203e-01,7.6321487e-01,7.2914099e-01,6.5328157e-01,6.3749033e-01,6.2231476e-01,5.8396622e-01,5.2424589e-01,4.8644843e-01,4.5977205e-01,3.7977197e-01,3.0657647e-01,2.6633990e-01,2.4830017e-01,2.8077959e-01,2.9427801e-01,2.3659696e-01,2.0088810e-01,2.0489693e-01,2.5935467e-01,3.6960378e-01,4.9622958e-01,5.6211574e-01,6.0623229e-01,6.4513373e-01,7.0906712e-01,7.6653165e-01,8.1869541e-01,8.9138698e-01,9.3012472e-01,9.8448450e-01,1.0056291e+00,9.9307283e-01,1.0318076e+00,1.0667882e+00,9.6743436e-01,7.8610325e-01,6.5608147e-01,6.1814653e-01,5.6639671e-01,4.4029941e-01,3.6531335e-01,3.3691582e-01,2.9915953e-01,2.4377098e-01,2.1082367e-01,2.0618339e-01,1.9459110e-01,1.7283177e-01,1.8344096e-01,2.5171741e-01,3.0517045e-01,3.8914035e-01,5.4293201e-01,7.0458043e-01,8.0115213e-01,8.3769501e-01,8.4235836e-01,8.6251309e-01,8.5584698e-01,9.2480020e-01,9.3935346e-01,8.7187682e-01,9.5495924e-01,9.6577364e-01,8.8497990e-01,8.8832158e-01,8.8927531e-01,8.0391750e-01,6.8817419e-01,5.9877019e-01,5.9186781e-01,5.5417595e-01,5.0234826e-01,4.7549106e-01,4.6855348e-01,4.7120229e-01,4.5261281e-01,3.7889611e-01,2.5343076e-01,1.0469812e-01,-8.0897152e-03,-1.4934797e-01,-2.7462936e-01,-3.3528648e-01,-3.7889461e-01,-3.8869868e-01,-3.7608491e-01,-3.8247191e-01,-3.8974721e-01,-3.8014040e-01,-2.7791277e-01,-1.6103790e-01,-1.0372529e-01,-1.0768763e-01,-1.1508729e-01,-1.3256698e-01,-2.0528163e-01,-2.6701169e-01,-2.6393716e-01,-2.0524112e-01,-1.0028647e-01,2.9414521e-02,9.3845522e-02,1.8086986e-01,2.5851385e-01,3.1460110e-01,4.3069359e-01,5.0481691e-01,7.2265819e-01,9.0902706e-01,1.0606044e+00,1.1933333e+00,1.2775484e+00,1.3592403e+00,1.4863414e+00,1.5884313e+00,1.6598276e+00,1.7171002e+00,1.6810351e+00,1.5580737e+00,1.5101635e+00,1.4442901e+00,1.3365941e+00,1.2942419e+00,1.3703119e+00,1.5052041e+00,1.6958972e+00,1.7627300e+00,1.9074604e+00,1.9208705e+00,1.7359462e+00,1.5246095e+00,1.1832622e+00,9.8110164e-01,9.0110903e-01,8.1369732e-01,9.0988564e-01,1.0827280e+00,1.1874398e+00,1.2976492e+00,1.6201012e+00,1.8392803e+00,1.6871314e+00,1.3090197e+00,7.8457753e-01,4.0273191e-01,1.1347856e-01,-1.8381802e-01,-4.2894055e-01,-6.6943576e-01,-8.3489958e-01,-9.8897533e-01,-1.1085428e+00,-1.2070487e+00,-1.2698997e+00,-1.3112004e+00,-1.3322810e+00,-1.3471201e+00,-1.3496336e+00,-1.3478952e+00,-1.3667098e+00,-1.4012382e+00,-1.4506136e+00,-1.5090741e+00,-1.5740736e+00,-1.6272218e+00,-1.6739475e+00,-1.7083169e+00,-1.7320755e+00,-1.7489930e+00,-1.7612630e+00,-1.7707709e+00,-1.7776266e+00,-1.7836583e+00,-1.7873244e+00,-1.7919059e+00,-1.7965674e+00,-1.7997507e+00,-1.8017649e+00,-1.8040426e+00,-1.8061722e+00,-1.8085788e+00,-1.8116914e+00,-1.8146963e+00,-1.8168150e+00,-1.8193402e+00,-1.8221028e+00,-1.8243476e+00,-1.8270876e+00,-1.8299197e+00,-1.8321217e+00,-1.8341529e+00,-1.8360855e+00,-1.8379430e+00,-1.8391420e+00:1
-5.9182708e-01,-5.7097984e-01,-5.9002393e-01,-6.6394766e-01,-7.5591829e-01,-8.3324754e-01,-8.9181943e-01,-9.3446406e-01,-9.5917819e-01,-9.7198653e-01,-9.6396160e-01,-9.3851611e-01,-9.4161606e-01,-9.6363598e-01,-9.8209761e-01,-1.0032796e+00,-1.0119122e+00,-1.0069522e+00,-1.0093006e+00,-1.0152972e+00,-1.0207021e+00,-1.0281125e+00,-1.0462417e+00,-1.0678617e+00,-1.0829141e+00,-1.0919510e+00,-1.0829189e+00,-1.0654574e+00,-1.0752452e+00,-1.0903197e+00,-1.0819331e+00,-1.0671251e+00,-1.0647403e+00,-1.0703622e+00,-1.0571501e+00,-1.0299267e+00,-1.0020078e+00,-9.6347573e-01,-9.1152956e-01,-8.5559363e-01,-7.9111451e-01,-7.2389925e-01,-6.6381730e-01,-5.8384159e-01,-5.0723513e-01,-4.9799158e-01,-5.2407087e-01,-5.2080693e-01,-5.2807144e-01,-5.4058668e-01,-4.8571616e-01,-4.0544804e-01,-3.3634258e-01,-2.5260571e-01,-1.3719216e-01,1.5081690e-02,1.4231607e-01,2.8729040e-01,4.0023766e-01,4.3061297e-01,4.3876729e-01,4.4440605e-01,5.0959508e-01,5.8345889e-01,6.3940936e-01,6.7608713e-01,6.9629033e-01,7.7713482e-01,8.6826476e-01,8.8733044e-01,9.8041673e-01,1.1053344e+00,1.1042587e+00,1.0378532e+00,9.4906608e-01,8.5349828e-01,7.4636650e-01,7.4749185e-01,7.8172490e-01,7.3345258e-01,7.9494078e-01,8.5934490e-01,8.0215686e-01,7.4124059e-01,6.4610151e-01,5.8066145e-01,6.2195310e-01,6.2961767e-01,6.6001775e-01,7.1590110e-01,6.9803259e-01,7.1636898e-01,7.2576046e-01,6.6768441e-01,6.2174234e-01,5.8831841e-01,5.3950901e-01,5.3551149e-01,5.1609501e-01,4.5080579e-01,3.6002762e-01,3.0492518e-01,2.7159577e-01,2.3535129e-01,2.5773682e-01,3.0080311e-01,2.9441472e-01,2.5057817e-01,2.5968361e-01,3.0965032e-01,4.1977163e-01,5.3459400e-01,5.8922940e-01,6.1300223e-01,6.2793215e-01,6.9737291e-01,7.3976693e-01,7.4320662e-01,7.8672447e-01,8.4807000e-01,8.9614984e-01,9.2414105e-01,9.3151350e-01,9.3832853e-01,9.2963424e-01,8.4613746e-01,7.5822178e-01,6.7505215e-01,5.8902597e-01,5.4552847e-01,5.0337898e-01,4.1305665e-01,3.4611110e-01,3.1828373e-01,2.7514008e-01,2.9437722e-01,2.8758668e-01,2.4803702e-01,2.4213297e-01,2.5017658e-01,2.8965442e-01,3.6144717e-01,4.4455246e-01,5.1967585e-01,6.4486601e-01,7.4749780e-01,7.5834951e-01,8.1704013e-01,8.2339933e-01,7.5641558e-01,8.6053321e-01,8.8857037e-01,8.5278311e-01,8.6364825e-01,8.8238900e-01,9.1439780e-01,8.8867955e-01,8.4043462e-01,7.8134545e-01,7.3830434e-01,6.5989680e-01,6.1026319e-01,6.1573492e-01,6.1872693e-01,5.8980522e-01,5.3523777e-01,5.3469558e-01,5.1553718e-01,3.9254983e-01,2.8863107e-01,1.7210379e-01,4.2124557e-02,-1.2807053e-01,-2.1192240e-01,-2.7090031e-01,-3.3617057e-01,-3.3747900e-01,-3.2645375e-01,-3.0881579e-01,-3.1856817e-01,-3.5955399e-01,-2.3731766e-01,-9.5789661e-02,-4.1476424e-02,-1.5699778e-02,-5.4952743e-02,-1.1740563e-01,-1.8372554e-01,-2.2737056e-01,-1.9907116e-01,-8.6769606e-02,7.9879510e-03,1.2749160e-01,2.3151166e-01,3.0722485e-01,3.6608569e-01,3.7857906e-01,4.6171133e-01,5.8397299e-01,7.2627677e-01,8.5061005e-01,9.8151633e-01,1.1162918e+00,1.2367661e+00,1.3686250e+00,1.5112068e+00,1.5707192e+00,1.5340066e+00,1.5240846e+00,1.5012250e+00,1.3749571e+00,1.3294072e+00,1.2937613e+00,1.2514552e+00,1.2667599e+00,1.3424053e+00,1.4002908e+00,1.5064183e+00,1.7409176e+00,1.8994882e+00,1.7968902e+00,1.7142589e+00,1.4904702e+00,1.1573554e+00,1.0607864e+00,9.5877142e-01,8.6810451e-01,1.0387958e+00,1.1915670e+00,1.2468527e+00,1.3884701e+00,1.6489038e+00,1.7006547e+00,1.6218215e+00,1.3158293e+00,8.3938885e-01,5.0047677e-01,2.1046030e-01,-7.9537759e-02,-3.2377172e-01,-5.6785898e-01,-7.3021983e-01,-8.8466881e-01,-1.0124587e+00,-1.1190859e+00,-1.1889413e+00,-1.2348938e+00,-1.2468463e+00,-1.2462800e+00,-1.2432398e+00,-1.2402935e+00,-1.2578112e+00,-1.2976229e+00,-1.3588176e+00,-1.4349968e+00,-1.5284816e+00,-1.6041904e+00,-1.6706671e+00,-1.7203159e+00,-1.7539305e+00,-1.7765943e+00,-1.7910457e+00,-1.8030906e+00,-1.8113663e+00,-1.8175071e+00,-1.8228363e+00,-1.8283443e+00,-1.8333620e+00,-1.8371703e+00,-1.8395359e+00,-1.8418109e+00,-1.8439131e+00,-1.8467078e+00,-1.8497292e+00,-1.8530414e+00,-1.8560154e+00,-1.8583069e+00,-1.8602528e+00,-1.8631058e+00,-1.8669664e+00,-1.8688181e+00,-1.8701928e+00,-1.8723216e+00,-1.8736945e+00,-1.8752949e+00,-1.8771268e+00:1
-6.9637574e-01,-6.4382723e-01,-6.5514167e-01,-7.1097519e-01,-8.0322595e-01,-8.9365728e-01,-9.4614686e-01,-9.6945331e-01,-9.8356211e-01,-9.9518308e-01,-1.0010637e+00,-9.9228210e-01,-9.8011293e-01,-9.9302730e-01,-1.0232553e+00,-1.0439656e+00,-1.0513228e+00,-1.0521992e+00,-1.0564046e+00,-1.0608804e+00,-1.0521403e+00,-1.0578567e+00,-1.0787669e+00,-1.0970929e+00,-1.1163718e+00,-1.1146986e+00,-1.0970442e+00,-1.0932358e+00,-1.1037925e+00,-1.1112089e+00,-1.1072335e+00,-1.0973472e+00,-1.0899435e+00,-1.0785200e+00,-1.0771457e+00,-1.0654419e+00,-1.0269527e+00,-9.9913544e-01,-9.5864181e-01,-9.1080304e-01,-8.5808827e-01,-7.7656929e-01,-6.9330700e-01,-6.2530373e-01,-5.7220214e-01,-5.5047450e-01,-5.7284699e-01,-5.7464043e-01,-5.5311780e-01,-5.6453643e-01,-5.4011305e-01,-4.7448867e-01,-4.1211518e-01,-2.9876074e-01,-1.6784437e-01,-3.2980401e-02,1.2282981e-01,2.4438668e-01,3.1720260e-01,4.1374009e-01,5.1868826e-01,5.6358127e-01,5.6725669e-01,5.8321022e-01,6.2221379e-01,6.2655667e-01,6.4826123e-01,7.4702005e-01,8.2727567e-01,8.8220261e-01,8.9476335e-01,8.8069678e-01,9.1500407e-01,8.3588637e-01,7.3162133e-01,6.5573806e-01,6.2592935e-01,6.2524552e-01,6.1493883e-01,6.2483493e-01,6.3216604e-01,6.6137074e-01,6.6772241e-01,6.5134633e-01,5.8962616e-01,5.3236837e-01,5.2439474e-01,5.5892850e-01,6.1012247e-01,7.1344485e-01,7.7669255e-01,6.9949151e-01,6.2934372e-01,5.9416627e-01,5.9776964e-01,5.4814334e-01,4.6231293e-01,4.4914981e-01,4.3142221e-01,3.8138334e-01,2.9811999e-01,2.1264994e-01,1.9494520e-01,1.9817707e-01,2.0529365e-01,2.0914252e-01,1.7588220e-01,1.5533182e-01,1.9475864e-01,2.6597916e-01,3.2745012e-01,4.1315488e-01,5.2903707e-01,5.9501671e-01,6.0815720e-01,6.3836014e-01,7.4336702e-01,8.7769498e-01,8.7074035e-01,8.5014461e-01,8.5917275e-01,8.5404221e-01,8.7662399e-01,9.3400801e-01,9.3055791e-01,7.9731219e-01,6.9712191e-01,6.0087667e-01,4.9645454e-01,4.4617864e-01,3.9324076e-01,3.2392251e-01,2.6955839e-01,2.7017388e-01,2.5441225e-01,1.9285416e-01,1.9801499e-01,1.8685589e-01,1.6496315e-01,1.9364693e-01,2.4486085e-01,3.3289891e-01,4.3260237e-01,5.4449496e-01,6.4164492e-01,7.5679989e-01,8.6156057e-01,9.3493641e-01,9.4955953e-01,9.0636924e-01,9.3605519e-01,9.5821060e-01,9.4317712e-01,9.6240104e-01,9.7199977e-01,9.6750211e-01,9.2219781e-01,8.1081397e-01,7.4994296e-01,6.9726810e-01,6.2423580e-01,5.6708916e-01,5.3734379e-01,5.1906626e-01,4.9802952e-01,5.2142948e-01,4.9351411e-01,3.8844075e-01,2.9496029e-01,2.3426632e-01,1.1264819e-01,-1.5359193e-02,-1.5578739e-01,-2.8449983e-01,-3.6931449e-01,-3.9572576e-01,-3.7744683e-01,-3.6010175e-01,-3.5427856e-01,-3.5395011e-01,-3.4920939e-01,-2.3024802e-01,-1.1617668e-01,-6.1137092e-02,-3.1044945e-02,-5.4495145e-02,-1.1993181e-01,-1.6827469e-01,-2.0805421e-01,-2.0270717e-01,-6.6540867e-02,4.1226490e-02,1.2196337e-01,2.0072035e-01,3.4135055e-01,4.5356288e-01,5.1104517e-01,6.5596140e-01,7.4375012e-01,8.8096815e-01,1.1112896e+00,1.2260592e+00,1.3030072e+00,1.4404326e+00,1.5745830e+00,1.6598154e+00,1.7127021e+00,1.7349257e+00,1.8363645e+00,1.9806251e+00,1.7301852e+00,1.5101255e+00,1.3985516e+00,1.2958232e+00,1.3484037e+00,1.5231991e+00,1.6049706e+00,1.7051752e+00,1.7734813e+00,2.0278713e+00,2.0418816e+00,1.7781514e+00,1.4913201e+00,1.2465701e+00,1.0398371e+00,9.2422086e-01,8.5117696e-01,8.8497422e-01,1.0260896e+00,1.2311723e+00,1.5283514e+00,1.7327365e+00,1.8023824e+00,1.6218342e+00,1.2598575e+00,7.6959568e-01,3.5832076e-01,5.5193629e-02,-2.3527461e-01,-4.4734936e-01,-6.3140038e-01,-7.7528761e-01,-9.1939158e-01,-1.0320594e+00,-1.1249960e+00,-1.1738397e+00,-1.1903490e+00,-1.1864586e+00,-1.1788013e+00,-1.1621179e+00,-1.1393323e+00,-1.1378385e+00,-1.1656012e+00,-1.2255697e+00,-1.3068174e+00,-1.4134589e+00,-1.5009303e+00,-1.5719725e+00,-1.6241434e+00,-1.6599531e+00,-1.6837970e+00,-1.6990561e+00,-1.7107443e+00,-1.7186597e+00,-1.7252003e+00,-1.7303781e+00,-1.7348341e+00,-1.7395217e+00,-1.7437024e+00,-1.7461595e+00,-1.7482690e+00,-1.7503838e+00,-1.7529982e+00,-1.7557820e+00,-1.7582112e+00,-1.7598465e+00,-1.7624568e+00,-1.7652921e+00,-1.7676066e+00,-1.7695512e+00,-1.7715944e+00,-1.7744650e+00,-1.7765743e+00,-1.7773633e+00,-1.7789851e+00,-1.7804869e+00:1
